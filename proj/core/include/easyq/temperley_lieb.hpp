#pragma once

#include <cstddef>
#include <map>
#include <string_view>
#include <vector>

#include "easyq/partition.hpp"
#include "easyq/rational.hpp"

namespace easyq {

inline constexpr std::size_t max_tl_strands = 10;

/// Rational combination of noncrossing pairings of k upper and k lower points,
/// with loop parameter delta.
class TLElement {
 public:
  TLElement(std::size_t k, Rational delta);

  static TLElement identity(std::size_t k, Rational delta);
  /// Single diagram with coefficient 1. Throws unless it is a noncrossing k+k pairing.
  static TLElement diagram(Partition const& d, Rational delta);

  std::size_t strands() const noexcept { return k_; }
  Rational const& delta() const noexcept { return delta_; }
  std::map<Partition, Rational> const& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(Partition const& d, Rational const& coefficient);

  TLElement& operator+=(TLElement const& other);
  TLElement& operator-=(TLElement const& other);
  TLElement& operator*=(Rational const& scalar);

  friend TLElement operator+(TLElement a, TLElement const& b) { return a += b; }
  friend TLElement operator-(TLElement a, TLElement const& b) { return a -= b; }
  friend TLElement operator*(TLElement a, Rational const& s) { return a *= s; }
  friend TLElement operator*(Rational const& s, TLElement a) { return a *= s; }
  friend TLElement operator*(TLElement const& a, TLElement const& b);

  friend bool operator==(TLElement const&, TLElement const&) = default;

 private:
  void require_compatible(TLElement const& other) const;

  std::size_t k_;
  Rational delta_;
  std::map<Partition, Rational> terms_;
};

/// Product a b: b stacked on top of a, each closed loop worth delta.
TLElement tl_multiply(TLElement const& a, TLElement const& b);

/// Unnormalized generator E_i = |^{i-1} (cup over cap) |^{k-i-1}, 1 <= i < k.
TLElement cup_cap(std::size_t i, std::size_t k, Rational const& delta);

/// Jones projection e_i = E_i / delta.
TLElement jones_generator(std::size_t i, std::size_t k, Rational const& delta);

TLElement tl_adjoint(TLElement const& x);

/// Normalized trace: delta^{loops of the closure - k} per diagram.
Rational markov_trace(TLElement const& x);

/// x (x) |, the inclusion TL(k) -> TL(k+1).
TLElement tl_embed(TLElement const& x);

/// Catalan(k) = |NC2(k,k)|, by enumeration.
std::size_t tl_dimension(std::size_t k);

/// The diagram basis NC2(k,k), canonical order.
std::vector<Partition> tl_basis(std::size_t k);

/// Parses expressions over e<i>, E<i>, id, rationals, +, -, * and parentheses.
TLElement parse_tl_expression(std::string_view text, std::size_t k, Rational const& delta);

}  // namespace easyq
