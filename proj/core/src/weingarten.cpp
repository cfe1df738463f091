#include "easyq/weingarten.hpp"

#include <array>
#include <unordered_map>

namespace easyq {

std::size_t join_blocks(Partition const& p, Partition const& q) {
  if (p.num_legs() != q.num_legs()) throw ShapeMismatch("join: different leg counts");
  // union-find over the blocks of p, merged along the blocks of q
  std::array<std::uint8_t, max_legs> parent{};
  for (std::size_t b = 0; b < p.num_blocks(); ++b) parent[b] = static_cast<std::uint8_t>(b);
  auto find = [&](std::uint8_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::array<int, max_legs> first{};
  first.fill(-1);
  std::size_t components = p.num_blocks();
  for (std::size_t leg = 0; leg < p.num_legs(); ++leg) {
    int& f = first[q.label(leg)];
    if (f < 0) {
      f = p.label(leg);
      continue;
    }
    auto a = find(static_cast<std::uint8_t>(f));
    auto b = find(p.label(leg));
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
      --components;
    }
  }
  return components;
}

ExactMatrix gram_matrix(std::vector<Partition> const& basis, long n) {
  std::size_t const d = basis.size();
  ExactMatrix g(d, d);
  std::vector<Rational> powers;
  Rational x = 1;
  for (std::size_t e = 0; e <= max_legs; ++e) {
    powers.push_back(x);
    x *= n;
  }
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a; b < d; ++b) {
      g(a, b) = powers[join_blocks(basis[a], basis[b])];
      g(b, a) = g(a, b);
    }
  }
  return g;
}

GramData gram(CategorySpec const& cat, ColorWord const& word, long n, std::size_t bound) {
  if (n < 1) throw std::invalid_argument("N must be positive");
  if (word.size() > bound) {
    throw BoundExceeded("Gram matrices are limited to " + std::to_string(bound) + " legs");
  }
  GramData g;
  g.category = cat;
  g.word = word;
  g.n = n;
  g.basis = category_set(cat, {}, word);
  g.matrix = gram_matrix(g.basis, n);
  g.rank = rank(g.matrix);
  return g;
}

GramSingular::GramSingular(std::size_t rank, std::size_t dim)
    : std::runtime_error("Gram matrix is singular: rank " + std::to_string(rank) + " < " +
                         std::to_string(dim)),
      rank_(rank),
      dim_(dim) {}

WeingartenData weingarten(GramData g, bool allow_pseudo) {
  std::size_t const d = g.basis.size();
  WeingartenData w;
  if (g.rank == d) {
    auto inv = inverse(g.matrix);
    if (!inv) throw GramSingular(g.rank, d);
    w.matrix = std::move(*inv);
    w.kind = InverseKind::exact;
  } else {
    if (!allow_pseudo) throw GramSingular(g.rank, d);
    auto const keep = independent_columns(g.matrix);
    auto inv = inverse(submatrix(g.matrix, keep, keep));
    if (!inv) throw std::logic_error("principal submatrix on independent columns is singular");
    w.matrix = ExactMatrix(d, d);
    for (std::size_t a = 0; a < keep.size(); ++a)
      for (std::size_t b = 0; b < keep.size(); ++b) w.matrix(keep[a], keep[b]) = (*inv)(a, b);
    w.kind = InverseKind::reflexive_pseudo;
  }
  w.gram = std::move(g);
  return w;
}

struct HaarIntegrator::Level {
  WeingartenData wg;
  std::unordered_map<Partition, std::vector<std::size_t>> below;
  std::map<std::pair<Partition, Partition>, Rational> sums;

  std::vector<std::size_t> const& basis_below(Partition const& kernel) {
    auto it = below.find(kernel);
    if (it != below.end()) return it->second;
    std::vector<std::size_t> list;
    for (std::size_t a = 0; a < wg.gram.basis.size(); ++a)
      if (refines(wg.gram.basis[a], kernel)) list.push_back(a);
    return below.emplace(kernel, std::move(list)).first->second;
  }
};

HaarIntegrator::HaarIntegrator(Group group, long n, bool allow_pseudo)
    : group_(group), n_(n), allow_pseudo_(allow_pseudo) {
  if (n < 1) throw std::invalid_argument("N must be positive");
}

HaarIntegrator::~HaarIntegrator() = default;

ColorWord HaarIntegrator::effective_word(MonomialSpec const& m) const {
  return is_real(group_.id) ? white_word(m.degree()) : m.word();
}

HaarIntegrator::Level& HaarIntegrator::level(ColorWord const& word) {
  auto it = levels_.find(word);
  if (it != levels_.end()) return *it->second;
  auto lvl = std::make_unique<Level>();
  lvl->wg = weingarten(gram(group_category(group_.id), word, n_), allow_pseudo_);
  return *levels_.emplace(word, std::move(lvl)).first->second;
}

WeingartenData const& HaarIntegrator::weingarten_for(ColorWord const& word) {
  std::lock_guard lock(mutex_);
  return level(word).wg;
}

Rational HaarIntegrator::kernel_sum(Partition const& row_kernel, Partition const& col_kernel) {
  std::lock_guard lock(mutex_);
  Level& lvl = level(row_kernel.lower_colors());
  auto key = std::make_pair(row_kernel, col_kernel);
  if (auto it = lvl.sums.find(key); it != lvl.sums.end()) return it->second;
  auto const& rows = lvl.basis_below(row_kernel);
  auto const& cols = lvl.basis_below(col_kernel);
  Rational sum = 0;
  for (std::size_t a : rows)
    for (std::size_t b : cols) sum += lvl.wg.matrix(a, b);
  lvl.sums.emplace(std::move(key), sum);
  return sum;
}

Rational HaarIntegrator::moment(MonomialSpec const& m) {
  for (auto const& f : m.factors) {
    if (f.i > n_ || f.j > n_) {
      throw std::out_of_range("monomial index exceeds N = " + std::to_string(n_));
    }
  }
  ColorWord const word = effective_word(m);
  Partition const ki = kernel(m.rows(), word);
  Partition const kj = kernel(m.cols(), word);
  Rational value = kernel_sum(ki, kj);
  if (group_.twisted && value != 0) value *= signature(ki) * signature(kj);
  return value;
}

Rational haar_moment(Group group, MonomialSpec const& m, long n, bool allow_pseudo) {
  HaarIntegrator integrator(group, n, allow_pseudo);
  return integrator.moment(m);
}

}  // namespace easyq
