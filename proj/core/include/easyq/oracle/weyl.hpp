#pragma once

#include <complex>
#include <vector>

#include "easyq/oracle/monte_carlo.hpp"
#include "easyq/partition.hpp"

namespace easyq::oracle {

/// Weyl matrices of Z_n: W_{ia} e_b = w^{ib} e_{a+b}, stored at index i*n + a.
struct WeylModel {
  long n = 1;
  std::complex<double> root;
  std::vector<NumericMatrix> matrices;

  NumericMatrix const& w(long i, long a) const;
  /// The coupling <i, b> = root^{ib}.
  std::complex<double> coupling(long i, long b) const;
};

WeylModel weyl_matrices(long n);

/// Largest entry of |A - B|.
double max_abs_diff(NumericMatrix const& a, NumericMatrix const& b);
double unitarity_residual(NumericMatrix const& u);

struct WeylReport {
  double input_unitarity = 0;
  double weyl_unitarity = 0;
  /// Largest residual among the adjoint and the three product rules.
  double relations = 0;
  double projections = 0;
  double orthogonality = 0;
  double sums = 0;

  double magic() const;
  bool ok(double tol = 1e-10) const;
};

/// Rank-one projections P_{ia,jb} onto W_{ia} U W_{jb}^*, flattened to C^{n^2};
/// row index i*n + a, column index j*n + b.
struct WeylMagicModel {
  WeylModel weyl;
  std::vector<std::vector<NumericMatrix>> projections;
  WeylReport report;
};

/// Throws std::invalid_argument unless U is n x n and unitary within 1e-10.
WeylMagicModel weyl_model(long n, NumericMatrix const& u);

/// For n = 2: the largest distance from each W_{ia} to the matching Pauli
/// matrix (I, Z, X, XZ) after removing a unimodular factor.
double pauli_residual(WeylModel const& model);

struct StationarityResult {
  NumericMatrix t;
  double residual = 0;
};

/// T_p with entries tr(P_{i1 j1}^{e1} ... P_{ip jp}^{ep}) averaged over Haar
/// unitaries U of size n, tr normalized on M_{n^2}. Residual is max |T^2 - T|.
StationarityResult stationarity_matrix(long n, std::size_t p, ColorWord const& word, MCConfig const& cfg);

}  // namespace easyq::oracle
