#include "easyq/oracle/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

namespace easyq::oracle {

namespace {

std::vector<int> identity_permutation(long n) {
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  return sigma;
}

void require_sn(long n) {
  if (n < 1 || n > max_sn_order) {
    throw std::out_of_range("permutation enumeration needs 1 <= N <= " + std::to_string(max_sn_order));
  }
}

std::uint64_t wreath_order(long n, unsigned s) {
  std::uint64_t order = 1;
  for (long r = 1; r <= n; ++r) {
    order *= static_cast<std::uint64_t>(r) * s;
    if (order > max_hns_order) throw std::out_of_range("group too large to enumerate");
  }
  return order;
}

void check_monomial(long n, MonomialSpec const& m) {
  if (m.max_index() > n) throw std::out_of_range("monomial index exceeds N");
}

}  // namespace

Rational sn_haar_moment(long n, MonomialSpec const& m) {
  require_sn(n);
  check_monomial(n, m);
  auto sigma = identity_permutation(n);
  long hits = 0, total = 0;
  do {
    ++total;
    bool all = true;
    for (auto const& f : m.factors) {
      if (sigma[static_cast<std::size_t>(f.j - 1)] != f.i - 1) {
        all = false;
        break;
      }
    }
    hits += all;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  Rational out(hits, total);
  out.canonicalize();
  return out;
}

std::vector<std::uint64_t> hns_residue_counts(long n, unsigned s, MonomialSpec const& m) {
  if (n < 1) throw std::out_of_range("N must be positive");
  if (s < 1) throw std::invalid_argument("s must be positive");
  wreath_order(n, s);
  check_monomial(n, m);
  auto sigma = identity_permutation(n);
  std::vector<long> phase(static_cast<std::size_t>(n), 0);
  std::vector<std::uint64_t> counts(s, 0);
  long const order = static_cast<long>(s);
  do {
    std::fill(phase.begin(), phase.end(), 0);
    while (true) {
      bool hit = true;
      long exponent = 0;
      for (auto const& f : m.factors) {
        if (sigma[static_cast<std::size_t>(f.j - 1)] != f.i - 1) {
          hit = false;
          break;
        }
        long const a = phase[static_cast<std::size_t>(f.j - 1)];
        exponent += f.color == Color::white ? a : -a;
      }
      if (hit) ++counts[static_cast<std::size_t>(((exponent % order) + order) % order)];
      std::size_t pos = 0;
      while (pos < phase.size() && ++phase[pos] == order) phase[pos++] = 0;
      if (pos == phase.size()) break;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return counts;
}

Cyclotomic hns_haar_moment(long n, unsigned s, MonomialSpec const& m) {
  Cyclotomic sum(s);
  auto const counts = hns_residue_counts(n, s, m);
  for (unsigned r = 0; r < s; ++r) {
    if (counts[r] == 0) continue;
    Cyclotomic term = Cyclotomic::root_power(s, r);
    term *= Cyclotomic(s, Rational(Integer(std::to_string(counts[r]))));
    sum += term;
  }
  sum /= Rational(Integer(std::to_string(wreath_order(n, s))));
  return sum;
}

std::complex<double> NumericMoment::to_complex() const {
  return {static_cast<double>(re), static_cast<double>(im)};
}

NumericMoment hns_haar_moment_numeric(long n, unsigned s, MonomialSpec const& m) {
  auto const counts = hns_residue_counts(n, s, m);
  HighPrecision const turn = 2 * boost::math::constants::pi<HighPrecision>() / s;
  NumericMoment out;
  for (unsigned r = 0; r < s; ++r) {
    if (counts[r] == 0) continue;
    HighPrecision const c(counts[r]);
    out.re += c * cos(turn * r);
    out.im += c * sin(turn * r);
  }
  HighPrecision const order(wreath_order(n, s));
  out.re /= order;
  out.im /= order;
  return out;
}

WreathMomentTable::WreathMomentTable(long n, unsigned s, ColorWord word)
    : n_(n), s_(s), word_(std::move(word)) {
  if (n < 1) throw std::out_of_range("N must be positive");
  if (s < 1 || s > 4) throw std::invalid_argument("exact tables need 1 <= s <= 4");
  group_order_ = wreath_order(n, s);
  std::size_t const k = word_.size();
  for (std::size_t r = 0; r < k; ++r) tuples_ *= static_cast<std::uint64_t>(n);
  counts_.assign(tuples_ * tuples_ * s_, 0);

  auto sigma = identity_permutation(n);
  std::vector<long> phase(static_cast<std::size_t>(n), 0);
  std::vector<int> cols(k, 0);
  do {
    std::fill(phase.begin(), phase.end(), 0);
    while (true) {
      std::fill(cols.begin(), cols.end(), 0);
      for (std::uint64_t col = 0; col < tuples_; ++col) {
        std::uint64_t row = 0;
        long exponent = 0;
        for (std::size_t r = 0; r < k; ++r) {
          auto const j = static_cast<std::size_t>(cols[r]);
          row = row * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(sigma[j]);
          exponent += word_[r] == Color::white ? phase[j] : -phase[j];
        }
        long const residue = ((exponent % static_cast<long>(s)) + static_cast<long>(s)) % static_cast<long>(s);
        ++counts_[(row * tuples_ + col) * s_ + static_cast<std::uint64_t>(residue)];
        for (std::size_t r = k; r-- > 0;) {
          if (++cols[r] < n) break;
          cols[r] = 0;
        }
      }
      std::size_t pos = 0;
      while (pos < phase.size() && ++phase[pos] == static_cast<long>(s)) phase[pos++] = 0;
      if (pos == phase.size()) break;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

std::uint64_t WreathMomentTable::encode(std::span<int const> indices) const {
  if (indices.size() != word_.size()) throw std::invalid_argument("index tuple has the wrong length");
  std::uint64_t code = 0;
  for (int i : indices) {
    if (i < 1 || i > n_) throw std::out_of_range("index outside 1..N");
    code = code * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(i - 1);
  }
  return code;
}

Cyclotomic WreathMomentTable::moment(std::span<int const> rows, std::span<int const> cols) const {
  std::uint64_t const base = (encode(rows) * tuples_ + encode(cols)) * s_;
  Cyclotomic sum(s_);
  for (unsigned r = 0; r < s_; ++r) {
    if (counts_[base + r] == 0) continue;
    Cyclotomic term = Cyclotomic::root_power(s_, r);
    term *= Cyclotomic(s_, Rational(static_cast<unsigned long>(counts_[base + r])));
    sum += term;
  }
  sum /= Rational(Integer(std::to_string(group_order_)));
  return sum;
}

std::vector<Rational> sn_truncated_char_law(long n, Rational const& t) {
  require_sn(n);
  if (t < 0 || t > 1) throw std::invalid_argument("t must lie in [0, 1]");
  Rational const scaled = t * n;
  long const s = mpz_class(scaled.get_num() / scaled.get_den()).get_si();
  std::vector<long> counts(static_cast<std::size_t>(s) + 1, 0);
  auto sigma = identity_permutation(n);
  long total = 0;
  do {
    long fixed = 0;
    for (long i = 0; i < s; ++i) fixed += sigma[static_cast<std::size_t>(i)] == i;
    ++counts[static_cast<std::size_t>(fixed)];
    ++total;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  std::vector<Rational> pmf;
  for (long c : counts) pmf.emplace_back(c, total);
  for (auto& p : pmf) p.canonicalize();
  return pmf;
}

Rational sn_truncated_char_moment(long n, Rational const& t, unsigned k) {
  auto const pmf = sn_truncated_char_law(n, t);
  Rational sum = 0;
  for (std::size_t c = 0; c < pmf.size(); ++c) sum += pmf[c] * power(Rational(static_cast<long>(c)), static_cast<long>(k));
  return sum;
}

}  // namespace easyq::oracle
