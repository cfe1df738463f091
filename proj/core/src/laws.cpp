#include "easyq/laws.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace easyq {

namespace {

constexpr std::array<std::pair<LawKind, std::string_view>, 8> law_names{{
    {LawKind::gaussian, "gaussian"},
    {LawKind::semicircle, "semicircle"},
    {LawKind::complex_gaussian, "complexGaussian"},
    {LawKind::circular, "circular"},
    {LawKind::poisson, "poisson"},
    {LawKind::free_poisson, "freePoisson"},
    {LawKind::bessel, "bessel"},
    {LawKind::free_bessel, "freeBessel"},
}};

}  // namespace

std::string_view law_name(LawKind kind) {
  for (auto const& [k, name] : law_names)
    if (k == kind) return name;
  return "?";
}

LawKind parse_law_kind(std::string_view text) {
  for (auto const& [k, name] : law_names)
    if (name == text) return k;
  throw ParseError("unknown law '" + std::string(text) + "'");
}

bool is_complex_law(LawKind kind) {
  return kind == LawKind::complex_gaussian || kind == LawKind::circular ||
         kind == LawKind::bessel || kind == LawKind::free_bessel;
}

CategorySpec law_category(LawId const& law) {
  switch (law.kind) {
    case LawKind::gaussian:
      return CategorySpec::named(CategoryId::P2);
    case LawKind::semicircle:
      return CategorySpec::named(CategoryId::NC2);
    case LawKind::complex_gaussian:
      return CategorySpec::named(CategoryId::Mcal_P2);
    case LawKind::circular:
      return CategorySpec::named(CategoryId::Mcal_NC2);
    case LawKind::poisson:
      return CategorySpec::named(CategoryId::P);
    case LawKind::free_poisson:
      return CategorySpec::named(CategoryId::NC);
    case LawKind::bessel:
      return CategorySpec::modular(false, law.s);
    case LawKind::free_bessel:
      return CategorySpec::modular(true, law.s);
  }
  return CategorySpec::named(CategoryId::P);
}

Rational law_moment(LawId const& law, ColorWord const& word) {
  if (law.t <= 0) throw std::invalid_argument("law parameter t must be positive");
  Rational sum = 0;
  for (auto const& p : category_set(law_category(law), {}, word)) {
    sum += power(law.t, static_cast<long>(p.num_blocks()));
  }
  return sum;
}

Rational law_moment(LawId const& law, std::size_t degree) {
  return law_moment(law, white_word(degree));
}

Rational derangement_probability(unsigned long n) {
  Rational sum = 0;
  Rational term = 1;
  for (unsigned long r = 0; r <= n; ++r) {
    if (r > 0) term /= -static_cast<long>(r);
    sum += term;
  }
  return sum;
}

double PoissonPmf::value() const { return to_double(prefactor) * exp_factor; }

PoissonPmf poisson_pmf_limit(Rational const& t, unsigned long k) {
  if (t <= 0) throw std::invalid_argument("t must be positive");
  PoissonPmf pmf;
  pmf.prefactor = power(t, static_cast<long>(k)) / Rational(factorial(k));
  pmf.exp_factor = std::exp(-to_double(t));
  return pmf;
}

}  // namespace easyq
