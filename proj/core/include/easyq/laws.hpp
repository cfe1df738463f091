#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "easyq/category.hpp"
#include "easyq/rational.hpp"

namespace easyq {

enum class LawKind {
  gaussian,
  semicircle,
  complex_gaussian,
  circular,
  poisson,
  free_poisson,
  bessel,
  free_bessel,
};

/// A limiting law with parameter t > 0; Bessel laws also carry s (0 stands for infinity).
struct LawId {
  LawKind kind = LawKind::gaussian;
  Rational t = 1;
  std::size_t s = 1;
};

std::string_view law_name(LawKind kind);
LawKind parse_law_kind(std::string_view text);

/// Whether moments are indexed by color words rather than plain degrees.
bool is_complex_law(LawKind kind);

/// Category whose partitions count the moments of the law.
CategorySpec law_category(LawId const& law);

/// Sum over D(word) of t^{|p|}.
Rational law_moment(LawId const& law, ColorWord const& word);

/// Plain-degree moment (all-white word).
Rational law_moment(LawId const& law, std::size_t degree);

/// sum_{r=0}^{N} (-1)^r / r!
Rational derangement_probability(unsigned long n);

/// Limit pmf t^k e^{-t} / k!, split as the exact prefactor t^k/k! and e^{-t}.
struct PoissonPmf {
  Rational prefactor;
  double exp_factor = 0;
  double value() const;
};

PoissonPmf poisson_pmf_limit(Rational const& t, unsigned long k);

}  // namespace easyq
