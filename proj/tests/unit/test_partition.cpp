#include <catch_amalgamated.hpp>

#include "easyq/enumerate.hpp"
#include "easyq/partition.hpp"
#include "oracles.hpp"

using namespace easyq;

namespace {

Partition lit(char const* text) { return Partition::parse(text); }

oracles::Labels labels_of(Partition const& p) {
  return {p.labels().begin(), p.labels().end()};
}

}  // namespace

TEST_CASE("literals round-trip") {
  for (char const* text : {"oo|oo {u1,d2}{u2,d1}", "-|oooo {d1,d2}{d3,d4}", "ob|bo {u1,u2}{d1,d2}", "-|-",
                           "o|o {u1,d1}", "-|obo {d1}{d2,d3}"}) {
    auto const p = lit(text);
    CHECK(Partition::parse(p.to_string()) == p);
  }
  CHECK(lit("oo|oo {u1,d2}{u2,d1}").to_string() == "oo|oo {u1,d2}{u2,d1}");
}

TEST_CASE("malformed literals are rejected") {
  for (char const* text : {"", "oo|oo", "ox|oo {u1,u2}{d1,d2}", "o|o {u1}{u1,d1}", "o|o {u1,d2}", "o|o {u1}"}) {
    CHECK_THROWS_AS(Partition::parse(text), ParseError);
  }
}

TEST_CASE("kernel of index tuples") {
  auto const w3 = white_word(3);
  CHECK(kernel(std::vector<int>{1, 1, 2}, w3) == lit("-|ooo {d1,d2}{d3}"));
  CHECK(kernel(std::vector<int>{5, 5, 5}, w3) == lit("-|ooo {d1,d2,d3}"));
  CHECK(kernel(std::vector<int>{1, 2, 1, 2}, white_word(4)) == lit("-|oooo {d1,d3}{d2,d4}"));
}

TEST_CASE("block counts") {
  CHECK(lit("-|ooo {d1,d2}{d3}").num_blocks() == 2);
  CHECK(one_block({}, white_word(4)).num_blocks() == 1);
  for (std::size_t k = 0; k < 6; ++k) CHECK(singletons({}, white_word(k)).num_blocks() == k);
}

TEST_CASE("join examples") {
  CHECK(join(lit("-|oo {d1}{d2}"), lit("-|oo {d1,d2}")) == lit("-|oo {d1,d2}"));
  CHECK(join(lit("-|oooo {d1,d2}{d3,d4}"), lit("-|oooo {d2,d3}{d1}{d4}")) == lit("-|oooo {d1,d2,d3,d4}"));
  auto const p = lit("-|ooooo {d1,d4}{d2}{d3,d5}");
  CHECK(join(p, p) == p);
}

TEST_CASE("join is a lattice operation") {
  auto const all = enumerate({}, white_word(4));
  for (auto const& a : all) {
    for (auto const& b : all) {
      auto const ab = join(a, b);
      CHECK(ab == join(b, a));
      CHECK(ab.num_blocks() <= std::min(a.num_blocks(), b.num_blocks()));
      CHECK(refines(a, ab));
      CHECK(refines(b, ab));
      if (refines(b, a)) CHECK(ab == a);
      for (auto const& c : all) CHECK(join(ab, c) == join(a, join(b, c)));
    }
  }
}

TEST_CASE("refinement examples and the Kronecker condition") {
  CHECK(refines(singletons({}, white_word(3)), lit("-|ooo {d1,d3}{d2}")));
  CHECK_FALSE(refines(one_block({}, white_word(2)), singletons({}, white_word(2))));
  CHECK(refines(lit("-|ooo {d1,d2}{d3}"), lit("-|ooo {d1,d2,d3}")));

  auto const parts = enumerate({}, white_word(4));
  for (auto const& idx : oracles::tuples(4, 3)) {
    auto const k = kernel(idx, white_word(4));
    for (auto const& p : parts) {
      bool constant = true;
      for (auto const& block : p.blocks())
        for (auto leg : block) constant = constant && idx[leg] == idx[block.front()];
      CHECK(refines(p, k) == constant);
    }
  }
}

TEST_CASE("signature examples") {
  CHECK(signature(lit("-|oooo {d1,d3}{d2,d4}")) == -1);
  CHECK(signature(lit("-|oooo {d1,d4}{d2,d3}")) == 1);
  CHECK(signature(lit("-|oooo {d1,d2,d3,d4}")) == 1);
}

TEST_CASE("signature against sorting parity") {
  for (std::size_t n = 0; n <= 8; n += 2) {
    for (auto const& p : enumerate({}, white_word(n), Filter::even_blocks)) {
      CHECK(signature(p) == oracles::sort_sign(labels_of(p)));
      if (is_noncrossing(p)) CHECK(signature(p) == 1);
    }
  }
}

TEST_CASE("signature of pairings counts crossings") {
  for (auto const& p : enumerate({}, white_word(6), Filter::pairing)) {
    auto const a = labels_of(p);
    int crossings = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j)
        for (std::size_t k = j + 1; k < a.size(); ++k)
          for (std::size_t l = k + 1; l < a.size(); ++l)
            crossings += a[i] == a[k] && a[j] == a[l];
    CHECK(signature(p) == (crossings % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("swapping adjacent legs in different blocks flips the signature") {
  for (auto const& p : enumerate({}, white_word(6), Filter::even_blocks)) {
    auto a = labels_of(p);
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      if (a[i] == a[i + 1]) continue;
      auto b = a;
      std::swap(b[i], b[i + 1]);
      auto const q = Partition::one_line(white_word(6), oracles::normalize(b));
      CHECK(signature(q) == -signature(p));
    }
  }
}

TEST_CASE("two-row signature follows the clockwise order") {
  auto const cross = lit("oo|oo {u1,d2}{u2,d1}");
  auto const straight = lit("oo|oo {u1,d1}{u2,d2}");
  CHECK(signature(cross) == -1);
  CHECK(signature(straight) == 1);
}

TEST_CASE("color predicates") {
  CHECK(blocks_matched(lit("-|ob {d1,d2}")));
  CHECK_FALSE(blocks_matched(lit("-|oo {d1,d2}")));
  CHECK(blocks_matched(lit("o|o {u1,d1}")));
  CHECK_FALSE(blocks_matched(lit("o|b {u1,d1}")));
  CHECK(blocks_matched(lit("-|o {d1}")));
}
