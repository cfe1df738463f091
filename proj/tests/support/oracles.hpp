#pragma once

// Brute-force references used by the tests. Nothing here calls into the
// library's combinatorics; partitions are plain label vectors.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <vector>

namespace oracles {

using Q = mpq_class;
using Z = mpz_class;
using Labels = std::vector<int>;

inline Q frac(long a, long b) {
  Q q(a, b);
  q.canonicalize();
  return q;
}

// Calls f on every set partition of n points, as a restricted growth string.
template <class F>
void for_each_set_partition(std::size_t n, F&& f) {
  Labels a(n, 0);
  auto rec = [&](auto&& self, std::size_t pos, int blocks) -> void {
    if (pos == n) {
      f(static_cast<Labels const&>(a));
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      a[pos] = b;
      self(self, pos + 1, std::max(blocks, b + 1));
    }
  };
  rec(rec, 0, 0);
}

inline std::vector<Labels> set_partitions(std::size_t n) {
  std::vector<Labels> out;
  for_each_set_partition(n, [&](Labels const& a) { out.push_back(a); });
  return out;
}

// Calls f on every perfect matching of n points, as block labels.
template <class F>
void for_each_pairing(std::size_t n, F&& f) {
  if (n % 2 != 0) return;
  Labels a(n, -1);
  auto rec = [&](auto&& self, int next) -> void {
    auto const first = std::find(a.begin(), a.end(), -1);
    if (first == a.end()) {
      f(static_cast<Labels const&>(a));
      return;
    }
    *first = next;
    for (auto it = first + 1; it != a.end(); ++it) {
      if (*it != -1) continue;
      *it = next;
      self(self, next + 1);
      *it = -1;
    }
    *first = -1;
  };
  rec(rec, 0);
}

inline int block_count(Labels const& a) { return a.empty() ? 0 : *std::max_element(a.begin(), a.end()) + 1; }

inline std::vector<int> block_sizes(Labels const& a) {
  std::vector<int> sizes(static_cast<std::size_t>(block_count(a)), 0);
  for (int x : a) ++sizes[static_cast<std::size_t>(x)];
  return sizes;
}

// Crossing: positions a < b < c < d with a ~ c, b ~ d and a !~ b.
inline bool crossing(Labels const& a) {
  std::size_t const n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l)
          if (a[i] == a[k] && a[j] == a[l] && a[i] != a[j]) return true;
  return false;
}

inline bool all_sizes(Labels const& a, bool (*pred)(int)) {
  auto const s = block_sizes(a);
  return std::all_of(s.begin(), s.end(), pred);
}

inline bool is_pairing(Labels const& a) { return all_sizes(a, [](int s) { return s == 2; }); }
inline bool is_even(Labels const& a) { return all_sizes(a, [](int s) { return s % 2 == 0; }); }
inline bool is_small(Labels const& a) { return all_sizes(a, [](int s) { return s <= 2; }); }

// Parity of the stable sort of the positions by block: +1 or -1.
inline int sort_sign(Labels const& a) {
  long inversions = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) inversions += a[i] > a[j];
  return inversions % 2 == 0 ? 1 : -1;
}

// a <= b in refinement order
inline bool finer(Labels const& a, Labels const& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i] == a[j] && b[i] != b[j]) return false;
  return true;
}

inline Labels normalize(Labels const& raw) {
  std::map<int, int> relabel;
  Labels out;
  for (int x : raw) {
    auto it = relabel.find(x);
    if (it == relabel.end()) it = relabel.emplace(x, static_cast<int>(relabel.size())).first;
    out.push_back(it->second);
  }
  return out;
}

inline Labels kernel(std::vector<int> const& idx) { return normalize(idx); }

// Product over blocks of b of (-1)^{m-1} (m-1)! with m the number of blocks of a inside.
inline Z mobius_closed(Labels const& a, Labels const& b) {
  std::vector<std::vector<int>> inside(static_cast<std::size_t>(block_count(b)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto& v = inside[static_cast<std::size_t>(b[i])];
    if (std::find(v.begin(), v.end(), a[i]) == v.end()) v.push_back(a[i]);
  }
  Z out = 1;
  for (auto const& v : inside) {
    long const m = static_cast<long>(v.size());
    Z f = 1;
    for (long r = 2; r < m; ++r) f *= r;
    out *= (m % 2 == 1 ? 1 : -1) * f;
  }
  return out;
}

inline Z bell(unsigned n) {
  // Bell triangle
  std::vector<Z> row{1};
  for (unsigned i = 0; i < n; ++i) {
    std::vector<Z> next{row.back()};
    for (Z const& x : row) next.push_back(next.back() + x);
    row = next;
  }
  return row.front();
}

inline Z binom(unsigned long n, unsigned long k) {
  Z out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

inline Z catalan(unsigned long n) { return binom(2 * n, n) / (n + 1); }

inline Z double_factorial_odd(unsigned long k) {
  Z out = 1;
  for (unsigned long r = 1; r + 1 <= 2 * k; r += 2) out *= r;
  return out;
}

// Noncrossing partitions of 2k points with all blocks even.
inline Z fuss_catalan(unsigned long k) { return binom(3 * k, k) / (2 * k + 1); }

inline Z narayana(unsigned long n, unsigned long k) { return binom(n, k) * binom(n, k - 1) / n; }

inline Z factorial(unsigned long n) {
  Z out = 1;
  for (unsigned long r = 2; r <= n; ++r) out *= r;
  return out;
}

// Integral of prod x_i^{a_i} over the unit sphere of R^N.
inline Q sphere_monomial(std::vector<int> const& exponents, long n) {
  long total = 0;
  Z num = 1;
  for (int a : exponents) {
    if (a % 2 != 0) return 0;
    for (int r = a - 1; r > 0; r -= 2) num *= r;
    total += a;
  }
  Z den = 1;
  for (long r = 0; r < total; r += 2) den *= n + r;
  Q out(num, den);
  out.canonicalize();
  return out;
}

// Exponent multiplicities of an index tuple.
inline std::vector<int> multiplicities(std::vector<int> const& idx, long n) {
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  for (int i : idx) ++out[static_cast<std::size_t>(i - 1)];
  return out;
}

// Average of prod u_{i_r j_r} over permutation matrices u_{ij} = [s(j) = i].
inline Q sn_average(std::vector<int> const& rows, std::vector<int> const& cols, long n) {
  std::vector<int> s(static_cast<std::size_t>(n));
  std::iota(s.begin(), s.end(), 1);
  long hits = 0, total = 0;
  do {
    ++total;
    bool ok = true;
    for (std::size_t r = 0; r < rows.size() && ok; ++r) ok = s[static_cast<std::size_t>(cols[r] - 1)] == rows[r];
    hits += ok;
  } while (std::next_permutation(s.begin(), s.end()));
  return frac(hits, total);
}

// Average over signed permutation matrices u_{ij} = e_j [s(j) = i], e_j = +-1.
inline Q hn_average(std::vector<int> const& rows, std::vector<int> const& cols, long n) {
  std::vector<int> s(static_cast<std::size_t>(n));
  std::iota(s.begin(), s.end(), 1);
  long sum = 0, total = 0;
  do {
    for (long mask = 0; mask < (1L << n); ++mask) {
      ++total;
      int value = 1;
      for (std::size_t r = 0; r < rows.size() && value != 0; ++r) {
        int const j = cols[r] - 1;
        if (s[static_cast<std::size_t>(j)] != rows[r]) value = 0;
        else if ((mask >> j) & 1) value = -value;
      }
      sum += value;
    }
  } while (std::next_permutation(s.begin(), s.end()));
  return frac(sum, total);
}

// Every index tuple in 1..n of the given length.
inline std::vector<std::vector<int>> tuples(std::size_t length, long n) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(length, 1);
  while (true) {
    out.push_back(t);
    std::size_t pos = 0;
    while (pos < length && t[pos] == n) t[pos++] = 1;
    if (pos == length) break;
    ++t[pos];
  }
  return out;
}

// Sums of prod u_{i_r j_r} over all (signed) permutation matrices, for every
// pair of index tuples of one length, indexed by their base-n codes.
struct MomentTable {
  long n = 0;
  std::size_t degree = 0;
  long order = 0;
  std::vector<long> sums;

  static long code(std::vector<int> const& idx, long n) {
    long c = 0;
    for (std::size_t r = idx.size(); r-- > 0;) c = c * n + (idx[r] - 1);
    return c;
  }
  Q at(std::vector<int> const& rows, std::vector<int> const& cols) const {
    long side = 1;
    for (std::size_t r = 0; r < degree; ++r) side *= n;
    return frac(sums[static_cast<std::size_t>(code(rows, n) * side + code(cols, n))], order);
  }
};

inline MomentTable permutation_table(long n, std::size_t degree, bool signs) {
  MomentTable t;
  t.n = n;
  t.degree = degree;
  auto const cols_all = tuples(degree, n);
  long const side = static_cast<long>(cols_all.size());
  t.sums.assign(static_cast<std::size_t>(side * side), 0);
  std::vector<int> s(static_cast<std::size_t>(n));
  std::iota(s.begin(), s.end(), 1);
  do {
    for (long mask = 0; mask < (signs ? (1L << n) : 1L); ++mask) {
      ++t.order;
      for (auto const& cols : cols_all) {
        std::vector<int> rows(degree);
        int sign = 1;
        for (std::size_t r = 0; r < degree; ++r) {
          rows[r] = s[static_cast<std::size_t>(cols[r] - 1)];
          if ((mask >> (cols[r] - 1)) & 1) sign = -sign;
        }
        t.sums[static_cast<std::size_t>(MomentTable::code(rows, n) * side + MomentTable::code(cols, n))] += sign;
      }
    }
  } while (std::next_permutation(s.begin(), s.end()));
  return t;
}

}  // namespace oracles
