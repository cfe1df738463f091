#include "easyq/oracle/monte_carlo.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>

#include "easyq/partition.hpp"

namespace easyq::oracle {

std::string_view mc_group_name(MCGroup g) {
  switch (g) {
    case MCGroup::O:
      return "O";
    case MCGroup::U:
      return "U";
    case MCGroup::B:
      return "B";
    case MCGroup::C:
      return "C";
  }
  return "?";
}

MCGroup parse_mc_group(std::string_view text) {
  for (auto g : {MCGroup::O, MCGroup::U, MCGroup::B, MCGroup::C})
    if (mc_group_name(g) == text) return g;
  throw ParseError("Monte Carlo sampling covers O, U, B and C, not '" + std::string(text) + "'");
}

Rng block_stream(std::uint64_t seed, std::uint64_t block) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  return Rng(seq);
}

Eigen::MatrixXd haar_orthogonal(long n, Rng& rng) {
  std::normal_distribution<double> gauss;
  Eigen::MatrixXd g(n, n);
  for (long c = 0; c < n; ++c)
    for (long r = 0; r < n; ++r) g(r, c) = gauss(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  auto const& packed = qr.matrixQR();
  for (long c = 0; c < n; ++c)
    if (packed(c, c) < 0) q.col(c) = -q.col(c);
  return q;
}

NumericMatrix haar_unitary(long n, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  NumericMatrix g(n, n);
  for (long c = 0; c < n; ++c)
    for (long r = 0; r < n; ++r) g(r, c) = {gauss(rng), gauss(rng)};
  Eigen::HouseholderQR<NumericMatrix> qr(g);
  NumericMatrix q = qr.householderQ();
  auto const& packed = qr.matrixQR();
  for (long c = 0; c < n; ++c) {
    auto const d = packed(c, c);
    double const a = std::abs(d);
    if (a > 0) q.col(c) *= d / a;
  }
  return q;
}

Eigen::MatrixXd bistochastic_frame(long n) {
  Eigen::MatrixXd seed = Eigen::MatrixXd::Identity(n, n);
  seed.col(0).setOnes();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(seed);
  Eigen::MatrixXd f = qr.householderQ();
  if (f.col(0).sum() < 0) f.col(0) = -f.col(0);
  return f;
}

NumericMatrix sample_group(MCGroup g, long n, Rng& rng, Eigen::MatrixXd const& frame) {
  switch (g) {
    case MCGroup::O:
      return haar_orthogonal(n, rng).cast<std::complex<double>>();
    case MCGroup::U:
      return haar_unitary(n, rng);
    case MCGroup::B:
    case MCGroup::C: {
      NumericMatrix d = NumericMatrix::Zero(n, n);
      d(0, 0) = 1;
      if (n > 1) {
        if (g == MCGroup::B) {
          d.bottomRightCorner(n - 1, n - 1) = haar_orthogonal(n - 1, rng).cast<std::complex<double>>();
        } else {
          d.bottomRightCorner(n - 1, n - 1) = haar_unitary(n - 1, rng);
        }
      }
      NumericMatrix const f = frame.cast<std::complex<double>>();
      return f * d * f.transpose();
    }
  }
  throw std::logic_error("unknown group");
}

std::vector<double> block_sums(MCConfig const& cfg, std::size_t width,
                               std::function<void(Rng&, std::vector<double>&)> const& sample) {
  if (cfg.samples == 0) throw std::invalid_argument("at least one sample is needed");
  std::uint64_t const blocks = (cfg.samples + mc_block_size - 1) / mc_block_size;
  std::vector<std::vector<double>> partial(blocks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    while (true) {
      std::uint64_t const b = next.fetch_add(1);
      if (b >= blocks) return;
      Rng rng = block_stream(cfg.seed, b);
      std::vector<double> sums(width, 0.0);
      std::uint64_t const begin = b * mc_block_size;
      std::uint64_t const end = std::min(cfg.samples, begin + mc_block_size);
      for (std::uint64_t s = begin; s < end; ++s) sample(rng, sums);
      partial[b] = std::move(sums);
    }
  };
  unsigned const workers = std::max(1u, cfg.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  // pairwise merge in a fixed order
  for (std::uint64_t stride = 1; stride < blocks; stride *= 2) {
    for (std::uint64_t b = 0; b + stride < blocks; b += 2 * stride) {
      for (std::size_t i = 0; i < width; ++i) partial[b][i] += partial[b + stride][i];
    }
  }
  return partial[0];
}

namespace {

MCEstimate finish(double sum, double sum_sq, std::uint64_t samples) {
  double const n = static_cast<double>(samples);
  MCEstimate e;
  e.mean = sum / n;
  double const var = std::max(0.0, sum_sq / n - e.mean * e.mean);
  e.std_error = samples > 1 ? std::sqrt(var / (n - 1)) : 0.0;
  return e;
}

}  // namespace

std::vector<MCEstimate> mc_haar_moments(MCGroup g, long n, std::vector<MonomialSpec> const& monomials,
                                        MCConfig const& cfg) {
  if (n < 2) throw std::invalid_argument("Monte Carlo sampling needs N >= 2");
  for (auto const& m : monomials)
    if (m.max_index() > n) throw std::out_of_range("monomial index exceeds N");
  Eigen::MatrixXd const frame = bistochastic_frame(n);
  // prefix tree of the monomials, so shared prefixes are multiplied once per sample
  struct Node {
    long parent;
    long entry;
    bool conj;
  };
  std::vector<Node> nodes;
  std::map<std::tuple<long, long, bool>, long> index;
  std::vector<long> leaf;
  for (auto const& m : monomials) {
    long at = -1;
    for (auto const& f : m.factors) {
      long const entry = (f.j - 1) * n + (f.i - 1);
      bool const conj = f.color == Color::black;
      auto [it, inserted] = index.try_emplace({at, entry, conj}, static_cast<long>(nodes.size()));
      if (inserted) nodes.push_back({at, entry, conj});
      at = it->second;
    }
    leaf.push_back(at);
  }
  std::size_t const count = monomials.size();
  auto sums = block_sums(cfg, 4 * count, [&](Rng& rng, std::vector<double>& acc) {
    NumericMatrix const u = sample_group(g, n, rng, frame);
    std::vector<std::complex<double>> value(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      auto const& node = nodes[k];
      auto const v = u.data()[node.entry];
      auto const factor = node.conj ? std::conj(v) : v;
      value[k] = node.parent < 0 ? factor : value[static_cast<std::size_t>(node.parent)] * factor;
    }
    for (std::size_t k = 0; k < count; ++k) {
      std::complex<double> const x = leaf[k] < 0 ? 1.0 : value[static_cast<std::size_t>(leaf[k])];
      acc[4 * k] += x.real();
      acc[4 * k + 1] += x.real() * x.real();
      acc[4 * k + 2] += x.imag();
      acc[4 * k + 3] += x.imag() * x.imag();
    }
  });
  std::vector<MCEstimate> out;
  for (std::size_t k = 0; k < count; ++k) {
    MCEstimate e = finish(sums[4 * k], sums[4 * k + 1], cfg.samples);
    MCEstimate const im = finish(sums[4 * k + 2], sums[4 * k + 3], cfg.samples);
    e.imag_mean = im.mean;
    e.imag_std_error = im.std_error;
    out.push_back(e);
  }
  return out;
}

MCEstimate mc_haar_moment(MCGroup g, long n, MonomialSpec const& m, MCConfig const& cfg) {
  return mc_haar_moments(g, n, {m}, cfg).front();
}

std::vector<MCEstimate> sphere_mc_moments(long n, std::vector<std::vector<int>> const& indices,
                                          MCConfig const& cfg) {
  if (n < 1) throw std::invalid_argument("N must be positive");
  for (auto const& idx : indices)
    for (int i : idx)
      if (i < 1 || i > n) throw std::out_of_range("sphere index outside 1..N");
  std::size_t const count = indices.size();
  auto sums = block_sums(cfg, 2 * count, [&](Rng& rng, std::vector<double>& acc) {
    std::normal_distribution<double> gauss;
    Eigen::VectorXd x(n);
    for (long i = 0; i < n; ++i) x(i) = gauss(rng);
    x.normalize();
    for (std::size_t k = 0; k < count; ++k) {
      double v = 1;
      for (int i : indices[k]) v *= x(i - 1);
      acc[2 * k] += v;
      acc[2 * k + 1] += v * v;
    }
  });
  std::vector<MCEstimate> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(finish(sums[2 * k], sums[2 * k + 1], cfg.samples));
  return out;
}

}  // namespace easyq::oracle
