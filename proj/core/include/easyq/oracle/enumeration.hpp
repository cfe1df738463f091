#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "easyq/high_precision.hpp"
#include "easyq/monomial.hpp"
#include "easyq/oracle/cyclotomic.hpp"
#include "easyq/rational.hpp"

namespace easyq::oracle {

inline constexpr long max_sn_order = 8;
inline constexpr std::uint64_t max_hns_order = 10'000'000;

/// Average over S_N of prod_r [sigma(j_r) = i_r] (and the same for u*).
Rational sn_haar_moment(long n, MonomialSpec const& m);

/// Average over Z_s wreath S_N, with u_ij = z^{a_j} [sigma(j) = i], in Q(z).
Cyclotomic hns_haar_moment(long n, unsigned s, MonomialSpec const& m);

/// Entry r counts the group elements contributing z^r to that average.
std::vector<std::uint64_t> hns_residue_counts(long n, unsigned s, MonomialSpec const& m);

struct NumericMoment {
  HighPrecision re = 0;
  HighPrecision im = 0;
  std::complex<double> to_complex() const;
};

/// Same average for any s >= 1, with the roots of unity at 100 digits.
NumericMoment hns_haar_moment_numeric(long n, unsigned s, MonomialSpec const& m);

/// Every moment of one color word over Z_s wreath S_N (s = 1 gives S_N), for
/// all index tuples at once: one pass over the group elements.
class WreathMomentTable {
 public:
  WreathMomentTable(long n, unsigned s, ColorWord word);

  long n() const noexcept { return n_; }
  unsigned s() const noexcept { return s_; }
  ColorWord const& word() const noexcept { return word_; }

  /// 1-based index tuples of the length of the word.
  Cyclotomic moment(std::span<int const> rows, std::span<int const> cols) const;

 private:
  std::uint64_t encode(std::span<int const> indices) const;

  long n_;
  unsigned s_;
  ColorWord word_;
  std::uint64_t tuples_ = 1;
  std::uint64_t group_order_ = 1;
  // counts_[(row * tuples_ + col) * s_ + r] = number of elements contributing z^r
  std::vector<std::uint32_t> counts_;
};

/// Exact law of the number of fixed points of sigma among 1..[tN]; entry k is P(chi = k).
std::vector<Rational> sn_truncated_char_law(long n, Rational const& t);

/// k-th moment of that law.
Rational sn_truncated_char_moment(long n, Rational const& t, unsigned k);

}  // namespace easyq::oracle
