#include <catch_amalgamated.hpp>

#include "easyq/category.hpp"
#include "easyq/enumerate.hpp"
#include "easyq/tensor_map.hpp"
#include "easyq/weingarten.hpp"

using namespace easyq;

TEST_CASE("identity, semicircle and crossing maps") {
  long const n = 3;
  CHECK(t_map(identity(white_word(2)), n) == ExactMatrix::identity(9));

  auto const cup = t_map(semicircle(Color::white, Color::white), n);
  REQUIRE(cup.rows() == 9);
  REQUIRE(cup.cols() == 1);
  for (std::size_t r = 0; r < 9; ++r) CHECK(cup(r, 0) == (r / 3 == r % 3 ? 1 : 0));

  auto const flip = t_map(crossing(Color::white, Color::white), n);
  auto const twisted = t_map_twisted(crossing(Color::white, Color::white), n);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      std::size_t const col = a * 3 + b, swapped = b * 3 + a;
      CHECK(flip(swapped, col) == 1);
      CHECK(twisted(swapped, col) == (a == b ? 1 : -1));
    }
  }
  // entries vanish away from the transposition
  Rational total = 0;
  for (auto const& x : flip.entries()) total += x;
  CHECK(total == 9);
}

TEST_CASE("Kronecker symbols") {
  auto const p = Partition::parse("oo|oo {u1,d2}{u2,d1}");
  std::vector<int> const row{2, 1}, col{1, 2};
  CHECK(delta(p, row, col, 2) == 1);
  CHECK(delta(p, col, col, 2) == 0);
  CHECK(delta_twisted(p, row, col, 2) == -1);
  std::vector<int> const same{1, 1};
  CHECK(delta_twisted(p, same, same, 2) == 1);
  CHECK_THROWS_AS(delta_twisted(Partition::parse("-|o {d1}"), std::vector<int>{1}, std::vector<int>{}, 2),
                  std::domain_error);
}

TEST_CASE("functoriality on small partitions") {
  std::vector<Partition> pool;
  for (std::size_t k = 0; k <= 2; ++k)
    for (std::size_t l = 0; l <= 2; ++l)
      for (auto const& p : enumerate(white_word(k), white_word(l))) pool.push_back(p);
  for (auto const& p : pool) {
    for (auto const& q : pool) {
      auto const plain = verify_functoriality(p, q, 2, false);
      CHECK(plain.ok());
      if (has_even_blocks(p) && has_even_blocks(q)) CHECK(verify_functoriality(p, q, 3, true).ok());
    }
  }
}

TEST_CASE("Mobius expansion of twisted maps") {
  for (auto const& p : enumerate(white_word(2), white_word(2), Filter::even_blocks)) {
    auto const r = mobius_expansion_check(p, 2);
    CHECK(r.holds);
    Rational own = 0;
    for (auto const& [tau, a] : r.coefficients)
      if (tau == p) own = a;
    CHECK(own == signature(p));
  }
}

TEST_CASE("rank of the noncrossing pairing maps equals the Gram rank") {
  for (long n : {2L, 3L}) {
    for (std::size_t k : {2u, 4u}) {
      auto const basis = category_set(CategorySpec::named(CategoryId::NC2), {}, white_word(k));
      auto const dim = static_cast<std::size_t>(checked_dimension(n, k));
      ExactMatrix span(dim, basis.size());
      for (std::size_t c = 0; c < basis.size(); ++c) {
        auto const v = t_map(basis[c], n);
        for (std::size_t r = 0; r < dim; ++r) span(r, c) = v(r, 0);
      }
      CHECK(rank(span) == gram(CategorySpec::named(CategoryId::NC2), white_word(k), n).rank);
      CHECK(span.transpose() * span == gram_matrix(basis, n));
    }
  }
}

TEST_CASE("dimension bound") {
  CHECK(checked_dimension(10, 6) == 1'000'000);
  CHECK_THROWS_AS(checked_dimension(10, 7), SizeBoundExceeded);
  CHECK_THROWS_AS(t_map(identity(white_word(7)), 10), SizeBoundExceeded);
  std::size_t visited = 0;
  for_each_entry(one_block(white_word(2), white_word(2)), 5, false, [&](MapEntry const& e) {
    ++visited;
    CHECK(e.value == 1);
    CHECK(e.row == e.col);
  });
  CHECK(visited == 5);
}

TEST_CASE("integer and exact maps agree") {
  for (auto const& p : enumerate(white_word(2), white_word(2), Filter::even_blocks)) {
    auto const m = int_t_map(p, 3, true);
    auto const x = t_map_twisted(p, 3);
    for (std::uint64_t r = 0; r < m.rows; ++r)
      for (std::uint64_t c = 0; c < m.cols; ++c) CHECK(Rational(m(r, c)) == x(r, c));
  }
}
