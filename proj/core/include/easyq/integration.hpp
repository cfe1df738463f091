#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "easyq/category.hpp"
#include "easyq/group.hpp"
#include "easyq/monomial.hpp"
#include "easyq/rational.hpp"

namespace easyq {

/// Moment of the truncated character u_11 + ... + u_ss along a color word,
/// computed as Tr(W_kN G_ks). Real groups ignore the colors.
Rational truncated_char_moment(Group group, long n, long s, ColorWord const& word,
                               bool allow_pseudo = false);

/// Large-N limit of the truncated character moments at s = tN: sum over
/// D(word) of t^{|p|}.
Rational asymptotic_char_moment(CategorySpec const& cat, Rational const& t,
                                ColorWord const& word);

enum class SphereKind { real, real_half, real_free };

std::string_view sphere_name(SphereKind kind);
SphereKind parse_sphere_kind(std::string_view text);
CategorySpec sphere_category(SphereKind kind);

/// Integral of x_{i1} ... x_{ik} over the sphere, as the sum over p in D(k)
/// and q <= ker i of W_kN(p, q).
Rational sphere_moment(SphereKind kind, std::vector<int> const& indices, long n,
                       bool allow_pseudo = false);

enum class IsometryFamily { O, U, H, generic };

/// Partial isometries of rank L in M x N matrices, with the category of the family.
struct PartialIsometrySpec {
  CategorySpec category;
  long m = 1;
  long n = 1;
  long l = 1;
};

/// O uses P2, U uses Mcal_P2 and H uses the blocks balanced modulo `reflection`.
PartialIsometrySpec isometry_spec(IsometryFamily family, long m, long n, long l,
                                  std::size_t reflection = 2);

IsometryFamily parse_isometry_family(std::string_view text);

/// Sum over p, q, r, s in D(k) of L^{|p v r|} delta_q(i) delta_s(j) W_kM(p, q) W_kN(r, s).
Rational partial_isometry_moment(PartialIsometrySpec const& spec, MonomialSpec const& m,
                                 bool allow_pseudo = false);

/// Moment along `word` of the sum of K coordinates on distinct rows and columns:
/// sum over p, q, r, s in D(k) of K^{|p v r|} L^{|q v s|} W_kM(p, q) W_kN(r, s).
Rational nonoverlapping_sum_moment(PartialIsometrySpec const& spec, long k,
                                   ColorWord const& word, bool allow_pseudo = false);

/// Limit of the above with K = kappa N, L = lambda N, M = mu N: sum over D(word)
/// of (kappa lambda / mu)^{|p|}.
Rational nonoverlapping_limit(CategorySpec const& cat, Rational const& kappa,
                              Rational const& lambda, Rational const& mu, ColorWord const& word);

}  // namespace easyq
