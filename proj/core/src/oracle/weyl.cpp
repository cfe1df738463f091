#include "easyq/oracle/weyl.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <stdexcept>

namespace easyq::oracle {

namespace {

using Complex = std::complex<double>;

long mod(long x, long n) { return ((x % n) + n) % n; }

Complex root_of_unity(long n, long k) {
  using boost::multiprecision::cpp_bin_float_50;
  cpp_bin_float_50 const angle = 2 * boost::math::constants::pi<cpp_bin_float_50>() * mod(k, n) / n;
  return {static_cast<double>(cos(angle)), static_cast<double>(sin(angle))};
}

// column-major flattening of an n x n matrix
Eigen::VectorXcd flatten(NumericMatrix const& m) {
  return Eigen::Map<Eigen::VectorXcd const>(m.data(), m.size());
}

}  // namespace

NumericMatrix const& WeylModel::w(long i, long a) const { return matrices[mod(i, n) * n + mod(a, n)]; }

Complex WeylModel::coupling(long i, long b) const { return root_of_unity(n, mod(i * b, n)); }

WeylModel weyl_matrices(long n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  WeylModel model;
  model.n = n;
  model.root = root_of_unity(n, 1);
  for (long i = 0; i < n; ++i) {
    for (long a = 0; a < n; ++a) {
      NumericMatrix w = NumericMatrix::Zero(n, n);
      for (long b = 0; b < n; ++b) w(mod(a + b, n), b) = root_of_unity(n, i * b);
      model.matrices.push_back(std::move(w));
    }
  }
  return model;
}

double max_abs_diff(NumericMatrix const& a, NumericMatrix const& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("shape mismatch");
  return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

double unitarity_residual(NumericMatrix const& u) {
  if (u.rows() != u.cols()) return INFINITY;
  return max_abs_diff(u.adjoint() * u, NumericMatrix::Identity(u.rows(), u.cols()));
}

double WeylReport::magic() const { return std::max({projections, orthogonality, sums}); }

bool WeylReport::ok(double tol) const {
  return weyl_unitarity <= tol && relations <= tol && magic() <= tol;
}

WeylMagicModel weyl_model(long n, NumericMatrix const& u) {
  if (u.rows() != n || u.cols() != n) throw std::invalid_argument("U must be n x n");
  double const input = unitarity_residual(u);
  if (!(input <= 1e-10)) throw std::invalid_argument("U is not unitary within 1e-10");
  WeylMagicModel out;
  out.weyl = weyl_matrices(n);
  WeylReport& r = out.report;
  r.input_unitarity = input;
  auto const& m = out.weyl;
  for (auto const& w : m.matrices) r.weyl_unitarity = std::max(r.weyl_unitarity, unitarity_residual(w));
  for (long i = 0; i < n; ++i) {
    for (long a = 0; a < n; ++a) {
      auto const& wia = m.w(i, a);
      r.relations = std::max(r.relations, max_abs_diff(wia.adjoint(), m.coupling(i, a) * m.w(-i, -a)));
      for (long j = 0; j < n; ++j) {
        for (long b = 0; b < n; ++b) {
          auto const& wjb = m.w(j, b);
          r.relations = std::max(r.relations, max_abs_diff(wia * wjb, m.coupling(i, b) * m.w(i + j, a + b)));
          r.relations = std::max(r.relations,
                                 max_abs_diff(wia * wjb.adjoint(), m.coupling(j - i, b) * m.w(i - j, a - b)));
          r.relations = std::max(r.relations,
                                 max_abs_diff(wia.adjoint() * wjb, m.coupling(i, a - b) * m.w(j - i, b - a)));
        }
      }
    }
  }

  long const size = n * n;
  out.projections.assign(size, std::vector<NumericMatrix>(size));
  for (long row = 0; row < size; ++row) {
    for (long col = 0; col < size; ++col) {
      Eigen::VectorXcd const v = flatten(m.matrices[row] * u * m.matrices[col].adjoint());
      out.projections[row][col] = v * v.adjoint() / v.squaredNorm();
    }
  }
  NumericMatrix const id = NumericMatrix::Identity(size, size);
  NumericMatrix const zero = NumericMatrix::Zero(size, size);
  for (long x = 0; x < size; ++x) {
    NumericMatrix row_sum = zero;
    NumericMatrix col_sum = zero;
    for (long y = 0; y < size; ++y) {
      auto const& p = out.projections[x][y];
      r.projections = std::max({r.projections, max_abs_diff(p * p, p), max_abs_diff(p.adjoint(), p)});
      row_sum += p;
      col_sum += out.projections[y][x];
      for (long z = y + 1; z < size; ++z) {
        r.orthogonality = std::max({r.orthogonality, max_abs_diff(p * out.projections[x][z], zero),
                                    max_abs_diff(out.projections[y][x] * out.projections[z][x], zero)});
      }
    }
    r.sums = std::max({r.sums, max_abs_diff(row_sum, id), max_abs_diff(col_sum, id)});
  }
  return out;
}

double pauli_residual(WeylModel const& model) {
  if (model.n != 2) throw std::invalid_argument("the Pauli family lives at n = 2");
  NumericMatrix x(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  NumericMatrix const targets[2][2] = {{NumericMatrix::Identity(2, 2), x}, {z, x * z}};
  double worst = 0;
  for (long i = 0; i < 2; ++i) {
    for (long a = 0; a < 2; ++a) {
      auto const& w = model.w(i, a);
      auto const& t = targets[i][a];
      Complex const factor = (t.adjoint() * w).trace() / 2.0;
      worst = std::max({worst, std::abs(std::abs(factor) - 1.0), max_abs_diff(w, factor * t)});
    }
  }
  return worst;
}

StationarityResult stationarity_matrix(long n, std::size_t p, ColorWord const& word, MCConfig const& cfg) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (p > 2) throw std::invalid_argument("stationarity matrices are limited to p <= 2");
  if (word.size() != p) throw std::invalid_argument("exponent word must have length p");
  StationarityResult res;
  if (p == 0) {
    res.t = NumericMatrix::Ones(1, 1);
    return res;
  }
  long const size = n * n;
  long dim = 1;
  for (std::size_t k = 0; k < p; ++k) dim *= size;
  WeylModel const model = weyl_matrices(n);
  // the projections are self-adjoint, so the exponents do not change the entries
  // vec(W_r U W_c^*) = (conj(W_c) kron W_r) vec(U), stacked over all (r, c)
  long const pairs = size * size;
  NumericMatrix lift(size * pairs, size);
  for (long row = 0; row < size; ++row) {
    for (long col = 0; col < size; ++col) {
      auto const& wr = model.matrices[row];
      NumericMatrix const wc = model.matrices[col].conjugate();
      auto block = lift.middleRows((row * size + col) * size, size);
      for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y) block.block(x * n, y * n, n, n) = wc(x, y) * wr;
    }
  }
  // tr(P_1 ... P_p) = <x_1, x_2> ... <x_p, x_1> / prod |x_k|^2, normalized by size
  std::vector<long> leg_table;
  for (long r = 0; r < dim; ++r) {
    for (long c = 0; c < dim; ++c) {
      std::vector<long> legs(p);
      long rr = r, cc = c;
      for (std::size_t k = p; k-- > 0;) {
        legs[k] = (rr % size) * size + cc % size;
        rr /= size;
        cc /= size;
      }
      leg_table.insert(leg_table.end(), legs.begin(), legs.end());
    }
  }
  auto const width = static_cast<std::size_t>(2 * dim * dim);
  auto sums = block_sums(cfg, width, [&](Rng& rng, std::vector<double>& acc) {
    NumericMatrix const u = haar_unitary(n, rng);
    Eigen::VectorXcd const stacked = lift * flatten(u);
    Eigen::Map<NumericMatrix const> const xi(stacked.data(), size, pairs);
    NumericMatrix const g = xi.adjoint() * xi;
    for (long r = 0; r < dim; ++r) {
      for (long c = 0; c < dim; ++c) {
        long const* legs = &leg_table[static_cast<std::size_t>((r * dim + c) * p)];
        Complex value = 1;
        double norms = 1;
        for (std::size_t k = 0; k < p; ++k) {
          value *= g(legs[k], legs[(k + 1) % p]);
          norms *= g(legs[k], legs[k]).real();
        }
        value /= norms * static_cast<double>(size);
        auto const slot = static_cast<std::size_t>(2 * (r * dim + c));
        acc[slot] += value.real();
        acc[slot + 1] += value.imag();
      }
    }
  });
  res.t = NumericMatrix(dim, dim);
  double const count = static_cast<double>(cfg.samples);
  for (long r = 0; r < dim; ++r) {
    for (long c = 0; c < dim; ++c) {
      auto const slot = static_cast<std::size_t>(2 * (r * dim + c));
      res.t(r, c) = {sums[slot] / count, sums[slot + 1] / count};
    }
  }
  res.residual = max_abs_diff(res.t * res.t, res.t);
  return res;
}

}  // namespace easyq::oracle
