#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <random>
#include <string_view>
#include <vector>

#include "easyq/monomial.hpp"

namespace easyq::oracle {

using NumericMatrix = Eigen::MatrixXcd;

struct MCConfig {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

/// Samples are drawn in blocks of this size, each block from its own stream.
inline constexpr std::uint64_t mc_block_size = 4096;

struct MCEstimate {
  double mean = 0;
  double std_error = 0;
  double imag_mean = 0;
  double imag_std_error = 0;
};

enum class MCGroup { O, U, B, C };

std::string_view mc_group_name(MCGroup g);
MCGroup parse_mc_group(std::string_view text);

using Rng = std::mt19937_64;

/// Stream for one block of samples, derived from the seed and the block index.
Rng block_stream(std::uint64_t seed, std::uint64_t block);

/// Haar orthogonal / unitary matrices: Gaussian matrix, QR, and the diagonal of
/// R rotated to be positive.
Eigen::MatrixXd haar_orthogonal(long n, Rng& rng);
NumericMatrix haar_unitary(long n, Rng& rng);

/// Real orthogonal F whose first column is (1,...,1)/sqrt(N).
Eigen::MatrixXd bistochastic_frame(long n);

/// One Haar sample of the given group, as a complex matrix.
NumericMatrix sample_group(MCGroup g, long n, Rng& rng, Eigen::MatrixXd const& frame);

/// Monte Carlo means of monomials, all from the same samples. Results depend
/// only on (seed, samples), not on the number of workers.
std::vector<MCEstimate> mc_haar_moments(MCGroup g, long n, std::vector<MonomialSpec> const& monomials,
                                        MCConfig const& cfg);

MCEstimate mc_haar_moment(MCGroup g, long n, MonomialSpec const& m, MCConfig const& cfg);

/// Means of x_{i1}...x_{ik} over the uniform real sphere in R^N.
std::vector<MCEstimate> sphere_mc_moments(long n, std::vector<std::vector<int>> const& indices,
                                          MCConfig const& cfg);

/// Runs `sample(rng, sums)` once per sample, with per-block partial sums merged
/// pairwise in block order. `sums` holds `width` accumulators.
std::vector<double> block_sums(MCConfig const& cfg, std::size_t width,
                               std::function<void(Rng&, std::vector<double>&)> const& sample);

}  // namespace easyq::oracle
