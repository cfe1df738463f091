#include "easyq/integration.hpp"

#include <stdexcept>

#include "easyq/weingarten.hpp"

namespace easyq {

Rational truncated_char_moment(Group group, long n, long s, ColorWord const& word,
                               bool allow_pseudo) {
  if (s < 0 || s > n) throw std::invalid_argument("truncation s must lie in 0..N");
  ColorWord const w = is_real(group.id) ? white_word(word.size()) : word;
  auto const wg = weingarten(gram(group_category(group.id), w, n), allow_pseudo);
  if (wg.gram.basis.empty()) return 0;
  ExactMatrix const gs = gram_matrix(wg.gram.basis, s);
  Rational trace = 0;
  for (std::size_t a = 0; a < gs.rows(); ++a)
    for (std::size_t b = 0; b < gs.cols(); ++b) trace += wg.matrix(a, b) * gs(b, a);
  return trace;
}

Rational asymptotic_char_moment(CategorySpec const& cat, Rational const& t, ColorWord const& word) {
  if (t <= 0) throw std::invalid_argument("t must be positive");
  Rational sum = 0;
  for (auto const& p : category_set(cat, {}, word)) sum += power(t, static_cast<long>(p.num_blocks()));
  return sum;
}

std::string_view sphere_name(SphereKind kind) {
  switch (kind) {
    case SphereKind::real:
      return "real";
    case SphereKind::real_half:
      return "real_half";
    case SphereKind::real_free:
      return "real_free";
  }
  return "?";
}

SphereKind parse_sphere_kind(std::string_view text) {
  for (auto k : {SphereKind::real, SphereKind::real_half, SphereKind::real_free})
    if (sphere_name(k) == text) return k;
  throw ParseError("unknown sphere '" + std::string(text) + "'");
}

CategorySpec sphere_category(SphereKind kind) {
  switch (kind) {
    case SphereKind::real:
      return CategorySpec::named(CategoryId::P2);
    case SphereKind::real_half:
      return CategorySpec::named(CategoryId::P2_star);
    case SphereKind::real_free:
      return CategorySpec::named(CategoryId::NC2);
  }
  return CategorySpec::named(CategoryId::P2);
}

Rational sphere_moment(SphereKind kind, std::vector<int> const& indices, long n, bool allow_pseudo) {
  for (int i : indices)
    if (i < 1 || i > n) throw std::out_of_range("sphere index outside 1..N");
  ColorWord const word = white_word(indices.size());
  auto const wg = weingarten(gram(sphere_category(kind), word, n), allow_pseudo);
  Partition const k = kernel(indices, word);
  Rational sum = 0;
  for (std::size_t b = 0; b < wg.gram.basis.size(); ++b) {
    if (!refines(wg.gram.basis[b], k)) continue;
    for (std::size_t a = 0; a < wg.gram.basis.size(); ++a) sum += wg.matrix(a, b);
  }
  return sum;
}

PartialIsometrySpec isometry_spec(IsometryFamily family, long m, long n, long l,
                                  std::size_t reflection) {
  PartialIsometrySpec spec;
  spec.m = m;
  spec.n = n;
  spec.l = l;
  switch (family) {
    case IsometryFamily::O:
      spec.category = CategorySpec::named(CategoryId::P2);
      break;
    case IsometryFamily::U:
      spec.category = CategorySpec::named(CategoryId::Mcal_P2);
      break;
    case IsometryFamily::H:
      spec.category = CategorySpec::modular(false, reflection);
      break;
    case IsometryFamily::generic:
      throw std::invalid_argument("the generic family needs an explicit category");
  }
  return spec;
}

IsometryFamily parse_isometry_family(std::string_view text) {
  if (text == "O") return IsometryFamily::O;
  if (text == "U") return IsometryFamily::U;
  if (text == "H") return IsometryFamily::H;
  if (text == "generic") return IsometryFamily::generic;
  throw ParseError("unknown family '" + std::string(text) + "'");
}

namespace {

void check_spec(PartialIsometrySpec const& spec) {
  if (spec.m < 1 || spec.n < 1 || spec.l < 1) throw std::invalid_argument("M, N, L must be positive");
  if (spec.l > spec.m || spec.l > spec.n) throw std::invalid_argument("L must not exceed M or N");
}

}  // namespace

Rational partial_isometry_moment(PartialIsometrySpec const& spec, MonomialSpec const& m,
                                 bool allow_pseudo) {
  check_spec(spec);
  for (auto const& f : m.factors) {
    if (f.i > spec.m || f.j > spec.n) throw std::out_of_range("monomial index outside M x N");
  }
  ColorWord const word = m.word();
  auto const wm = weingarten(gram(spec.category, word, spec.m), allow_pseudo);
  auto const wn = weingarten(gram(spec.category, word, spec.n), allow_pseudo);
  auto const& basis = wm.gram.basis;
  if (basis.empty()) return 0;
  ExactMatrix const middle = wm.matrix * gram_matrix(basis, spec.l) * wn.matrix;
  Partition const ki = kernel(m.rows(), word);
  Partition const kj = kernel(m.cols(), word);
  Rational sum = 0;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (!refines(basis[a], ki)) continue;
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (refines(basis[b], kj)) sum += middle(a, b);
  }
  return sum;
}

Rational nonoverlapping_sum_moment(PartialIsometrySpec const& spec, long k, ColorWord const& word,
                                   bool allow_pseudo) {
  check_spec(spec);
  if (k < 0 || k > spec.m || k > spec.n) throw std::invalid_argument("K must lie in 0..min(M, N)");
  auto const wm = weingarten(gram(spec.category, word, spec.m), allow_pseudo);
  auto const wn = weingarten(gram(spec.category, word, spec.n), allow_pseudo);
  auto const& basis = wm.gram.basis;
  if (basis.empty()) return 0;
  ExactMatrix const inner = gram_matrix(basis, k) * wn.matrix * gram_matrix(basis, spec.l);
  Rational sum = 0;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) sum += wm.matrix(a, b) * inner(a, b);
  return sum;
}

Rational nonoverlapping_limit(CategorySpec const& cat, Rational const& kappa, Rational const& lambda,
                              Rational const& mu, ColorWord const& word) {
  if (kappa <= 0 || lambda <= 0 || mu <= 0) throw std::invalid_argument("parameters must be positive");
  return asymptotic_char_moment(cat, kappa * lambda / mu, word);
}

}  // namespace easyq
