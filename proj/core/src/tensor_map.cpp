#include "easyq/tensor_map.hpp"

#include <map>
#include <unordered_map>

#include "easyq/category.hpp"
#include "easyq/lattice.hpp"

namespace easyq {

namespace {

void require_even(Partition const& p) {
  if (!has_even_blocks(p)) {
    throw std::domain_error("twisted maps need a partition with even blocks: " + p.to_string());
  }
}

void check_indices(std::span<int const> indices, std::size_t expected, long n, char const* what) {
  if (indices.size() != expected) {
    throw ShapeMismatch(std::string(what) + " index tuple has length " +
                        std::to_string(indices.size()) + ", expected " +
                        std::to_string(expected));
  }
  for (int i : indices) {
    if (i < 1 || i > n) throw std::out_of_range("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
}

std::string rgs_key(std::vector<long> const& values) {
  std::string key(values.size(), '\0');
  std::vector<long> seen;
  for (std::size_t b = 0; b < values.size(); ++b) {
    std::size_t pos = 0;
    while (pos < seen.size() && seen[pos] != values[b]) ++pos;
    if (pos == seen.size()) seen.push_back(values[b]);
    key[b] = static_cast<char>(pos);
  }
  return key;
}

}  // namespace

std::uint64_t checked_dimension(long n, std::size_t exponent, std::uint64_t bound) {
  if (n < 1) throw std::invalid_argument("N must be positive");
  std::uint64_t dim = 1;
  for (std::size_t e = 0; e < exponent; ++e) {
    dim *= static_cast<std::uint64_t>(n);
    if (dim > bound) {
      throw SizeBoundExceeded(std::to_string(n) + "^" + std::to_string(exponent) +
                              " exceeds the dimension bound " + std::to_string(bound));
    }
  }
  return dim;
}

int delta(Partition const& p, std::span<int const> row, std::span<int const> col, long n) {
  check_indices(row, p.num_lower(), n, "row");
  check_indices(col, p.num_upper(), n, "column");
  std::vector<int> value(p.num_blocks(), 0);
  for (std::size_t leg = 0; leg < p.num_legs(); ++leg) {
    int const i = leg < p.num_upper() ? col[leg] : row[leg - p.num_upper()];
    int& v = value[p.label(leg)];
    if (v == 0) v = i; else if (v != i) return 0;
  }
  return 1;
}

int delta_twisted(Partition const& p, std::span<int const> row, std::span<int const> col, long n) {
  require_even(p);
  if (delta(p, row, col, n) == 0) return 0;
  return signature(kernel(col, row, p.upper_colors(), p.lower_colors()));
}

void for_each_entry(Partition const& p, long n, bool twisted,
                    std::function<void(MapEntry const&)> const& visit, std::uint64_t bound) {
  if (twisted) require_even(p);
  std::size_t const k = p.num_upper(), l = p.num_lower(), blocks = p.num_blocks();
  checked_dimension(n, k, bound);
  checked_dimension(n, l, bound);
  auto const big_n = static_cast<std::uint64_t>(n);

  // T_p is linear in the block values: row = sum_b v_b row_weight[b]
  std::vector<std::uint64_t> row_weight(blocks, 0), col_weight(blocks, 0);
  std::uint64_t place = 1;
  for (std::size_t j = l; j-- > 0;) {
    row_weight[p.label(k + j)] += place;
    place *= big_n;
  }
  place = 1;
  for (std::size_t i = k; i-- > 0;) {
    col_weight[p.label(i)] += place;
    place *= big_n;
  }

  std::unordered_map<std::string, int> sign_cache;
  std::vector<int> kernel_labels(p.num_legs());
  auto sign_of = [&](std::vector<long> const& values) {
    auto key = rgs_key(values);
    if (auto it = sign_cache.find(key); it != sign_cache.end()) return it->second;
    for (std::size_t leg = 0; leg < p.num_legs(); ++leg) kernel_labels[leg] = key[p.label(leg)];
    int const s = signature(Partition::from_labels(p.upper_colors(), p.lower_colors(), kernel_labels));
    sign_cache.emplace(std::move(key), s);
    return s;
  };

  std::vector<long> values(blocks, 0);
  std::uint64_t row = 0, col = 0;
  while (true) {
    visit({row, col, twisted ? sign_of(values) : 1});
    std::size_t b = 0;
    for (; b < blocks; ++b) {
      if (values[b] + 1 < n) {
        ++values[b];
        row += row_weight[b];
        col += col_weight[b];
        break;
      }
      row -= static_cast<std::uint64_t>(n - 1) * row_weight[b];
      col -= static_cast<std::uint64_t>(n - 1) * col_weight[b];
      values[b] = 0;
    }
    if (b == blocks) break;
  }
}

ExactMatrix t_map(Partition const& p, long n, std::uint64_t bound) {
  ExactMatrix m(checked_dimension(n, p.num_lower(), bound), checked_dimension(n, p.num_upper(), bound));
  for_each_entry(p, n, false, [&](MapEntry const& e) { m(e.row, e.col) = e.value; }, bound);
  return m;
}

ExactMatrix t_map_twisted(Partition const& p, long n, std::uint64_t bound) {
  require_even(p);
  ExactMatrix m(checked_dimension(n, p.num_lower(), bound), checked_dimension(n, p.num_upper(), bound));
  for_each_entry(p, n, true, [&](MapEntry const& e) { m(e.row, e.col) = e.value; }, bound);
  return m;
}

IntMatrix int_t_map(Partition const& p, long n, bool twisted, std::uint64_t bound) {
  IntMatrix m;
  m.rows = checked_dimension(n, p.num_lower(), bound);
  m.cols = checked_dimension(n, p.num_upper(), bound);
  m.entries.assign(m.rows * m.cols, 0);
  for_each_entry(p, n, twisted, [&](MapEntry const& e) { m(e.row, e.col) = e.value; }, bound);
  return m;
}

FunctorialityReport verify_functoriality(Partition const& p, Partition const& q, long n,
                                         bool twisted) {
  FunctorialityReport report;
  auto const suffix = [&] {
    return std::string(" for p = ") + p.to_string() + ", q = " + q.to_string() + ", N = " +
           std::to_string(n) + (twisted ? " (twisted)" : "");
  };
  IntMatrix const tp = int_t_map(p, n, twisted);
  IntMatrix const tq = int_t_map(q, n, twisted);
  auto const nonzero = [](IntMatrix const& m) {
    std::uint64_t c = 0;
    for (long v : m.entries) c += v != 0;
    return c;
  };

  {
    std::uint64_t const lower_q = checked_dimension(n, q.num_lower());
    std::uint64_t const upper_q = checked_dimension(n, q.num_upper());
    std::uint64_t count = 0;
    bool match = true;
    for_each_entry(tensor(p, q), n, twisted, [&](MapEntry const& e) {
      ++count;
      long const expected = tp(e.row / lower_q, e.col / upper_q) * tq(e.row % lower_q, e.col % upper_q);
      if (expected != e.value) match = false;
    });
    report.tensor_ok = match && count == nonzero(tp) * nonzero(tq);
    if (!report.tensor_ok) report.defects.push_back("tensor identity fails" + suffix());
  }

  if (q.lower_colors() == p.upper_colors()) {
    report.compose_checked = true;
    auto const [r, loops] = compose(q, p);
    IntMatrix const tr = int_t_map(r, n, twisted);
    long scale = 1;
    for (std::size_t i = 0; i < loops; ++i) scale *= n;
    bool match = tr.rows == tp.rows && tr.cols == tq.cols;
    for (std::uint64_t a = 0; match && a < tp.rows; ++a) {
      for (std::uint64_t c = 0; c < tq.cols; ++c) {
        long sum = 0;
        for (std::uint64_t b = 0; b < tp.cols; ++b) sum += tp(a, b) * tq(b, c);
        if (sum != scale * tr(a, c)) {
          match = false;
          break;
        }
      }
    }
    report.compose_ok = match;
    if (!match) report.defects.push_back("composition identity fails" + suffix());
  }

  {
    IntMatrix const ta = int_t_map(adjoint(p), n, twisted);
    bool match = ta.rows == tp.cols && ta.cols == tp.rows;
    for (std::uint64_t a = 0; match && a < tp.rows; ++a)
      for (std::uint64_t b = 0; b < tp.cols; ++b)
        if (tp(a, b) != ta(b, a)) match = false;
    report.adjoint_ok = match;
    if (!match) report.defects.push_back("adjoint identity fails" + suffix());
  }
  return report;
}

MobiusExpansionReport mobius_expansion_check(Partition const& p, long n) {
  require_even(p);
  MobiusExpansionReport report;
  auto const above = interval(p, one_block(p.upper_colors(), p.lower_colors()));
  ExactMatrix rhs(checked_dimension(n, p.num_lower()), checked_dimension(n, p.num_upper()));
  for (auto const& tau : above) {
    Rational alpha = 0;
    for (auto const& rho : interval(p, tau)) alpha += signature(rho) * mobius(rho, tau);
    if (alpha != 0) {
      for_each_entry(tau, n, false, [&](MapEntry const& e) { rhs(e.row, e.col) += alpha; });
    }
    report.coefficients.emplace_back(tau, alpha);
  }
  ExactMatrix const lhs = t_map_twisted(p, n);
  report.holds = lhs == rhs;
  if (!report.holds) {
    report.defects.push_back("Moebius expansion fails for " + p.to_string() + " at N = " +
                             std::to_string(n));
  }
  return report;
}

}  // namespace easyq
