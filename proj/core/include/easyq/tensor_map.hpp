#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "easyq/exact_matrix.hpp"
#include "easyq/partition.hpp"
#include "easyq/rational.hpp"

namespace easyq {

class SizeBoundExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Largest admissible N^k along either side of a tensor map.
inline constexpr std::uint64_t default_dimension_bound = 1'000'000;

/// Kronecker symbol: 1 when the indices (1-based; `row` on the lower legs,
/// `col` on the upper legs) are constant on every block of p.
int delta(Partition const& p, std::span<int const> row, std::span<int const> col, long n);

/// Twisted symbol: the signature of ker(col over row) when that kernel is
/// coarser than p, 0 otherwise. p must have even blocks.
int delta_twisted(Partition const& p, std::span<int const> row, std::span<int const> col, long n);

/// N^exponent as an unsigned dimension, throwing when it passes `bound`.
std::uint64_t checked_dimension(long n, std::size_t exponent,
                                std::uint64_t bound = default_dimension_bound);

/// N^l x N^k matrix of T_p in the tensor basis, first factor most significant.
ExactMatrix t_map(Partition const& p, long n, std::uint64_t bound = default_dimension_bound);

/// Matrix of the twisted map T'_p. Throws std::domain_error off even partitions.
ExactMatrix t_map_twisted(Partition const& p, long n,
                          std::uint64_t bound = default_dimension_bound);

struct MapEntry {
  std::uint64_t row;
  std::uint64_t col;
  int value;
};

/// Visits the nonzero entries of T_p (or T'_p), one per assignment of values to blocks.
void for_each_entry(Partition const& p, long n, bool twisted,
                    std::function<void(MapEntry const&)> const& visit,
                    std::uint64_t bound = default_dimension_bound);

/// Dense integer matrix, used where entries are known to be small integers.
struct IntMatrix {
  std::uint64_t rows = 0;
  std::uint64_t cols = 0;
  std::vector<long> entries;
  long operator()(std::uint64_t r, std::uint64_t c) const { return entries[r * cols + c]; }
  long& operator()(std::uint64_t r, std::uint64_t c) { return entries[r * cols + c]; }
  friend bool operator==(IntMatrix const&, IntMatrix const&) = default;
};

IntMatrix int_t_map(Partition const& p, long n, bool twisted,
                    std::uint64_t bound = default_dimension_bound);

struct FunctorialityReport {
  bool tensor_ok = true;
  bool compose_checked = false;
  bool compose_ok = true;
  bool adjoint_ok = true;
  std::vector<std::string> defects;
  bool ok() const noexcept { return defects.empty(); }
};

/// Checks T_p (x) T_q = T_[pq], T_p T_q = N^c T_r with (r, c) = compose(q, p)
/// whenever the colors allow it, and (T_p)^t = T_{p*}; or the same identities
/// for the twisted maps.
FunctorialityReport verify_functoriality(Partition const& p, Partition const& q, long n,
                                         bool twisted);

struct MobiusExpansionReport {
  /// alpha_tau for every tau coarser than p, canonical order (zeros included).
  std::vector<std::pair<Partition, Rational>> coefficients;
  bool holds = false;
  std::vector<std::string> defects;
};

/// Expands T'_p = sum over tau >= p of alpha_tau T_tau with
/// alpha_tau = sum over p <= rho <= tau of sign(rho) mu(rho, tau), and compares
/// both sides exactly.
MobiusExpansionReport mobius_expansion_check(Partition const& p, long n);

}  // namespace easyq
