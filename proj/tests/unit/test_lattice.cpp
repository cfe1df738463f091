#include <catch_amalgamated.hpp>

#include "easyq/enumerate.hpp"
#include "easyq/lattice.hpp"
#include "oracles.hpp"

using namespace easyq;

TEST_CASE("Mobius examples") {
  auto const p = Partition::parse("-|oooo {d1,d3}{d2}{d4}");
  CHECK(mobius(p, p) == 1);
  CHECK(mobius(Partition::parse("-|ooo {d1}{d2}{d3}"), Partition::parse("-|ooo {d1,d2}{d3}")) == -1);
  CHECK(mobius(singletons({}, white_word(3)), one_block({}, white_word(3))) == 2);
  CHECK(mobius(Partition::parse("-|oo {d1,d2}"), Partition::parse("-|oo {d1}{d2}")) == 0);
}

TEST_CASE("Mobius matches the closed product formula") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto const all = enumerate({}, white_word(n));
    for (auto const& a : all) {
      for (auto const& b : all) {
        if (!refines(a, b)) continue;
        oracles::Labels la(a.labels().begin(), a.labels().end());
        oracles::Labels lb(b.labels().begin(), b.labels().end());
        CHECK(mobius(a, b) == Rational(oracles::mobius_closed(la, lb)));
      }
    }
  }
}

TEST_CASE("Mobius inverts the zeta function") {
  MobiusFunction mu;
  for (std::size_t n = 1; n <= 5; ++n) {
    auto const all = enumerate({}, white_word(n));
    for (auto const& s : all) {
      for (auto const& p : all) {
        if (!refines(s, p)) continue;
        Rational sum = 0;
        for (auto const& t : interval(s, p)) sum += mu(s, t);
        CHECK(sum == (s == p ? 1 : 0));
      }
    }
  }
  CHECK(mu.cache_size() > 0);
}

TEST_CASE("intervals") {
  auto const bottom = singletons({}, white_word(4));
  auto const top = one_block({}, white_word(4));
  CHECK(interval(bottom, top).size() == 15);
  CHECK(interval(top, top) == std::vector<Partition>{top});
  CHECK(interval(top, bottom).empty());
}
