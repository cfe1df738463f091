#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "easyq/category.hpp"
#include "easyq/exact_matrix.hpp"
#include "easyq/group.hpp"
#include "easyq/monomial.hpp"
#include "easyq/partition.hpp"
#include "easyq/rational.hpp"

namespace easyq {

inline constexpr std::size_t default_gram_bound = 8;

struct GramData {
  CategorySpec category;
  ColorWord word;
  long n = 0;
  std::vector<Partition> basis;
  ExactMatrix matrix;
  std::size_t rank = 0;
};

/// |p v q| for two one-line partitions of the same length.
std::size_t join_blocks(Partition const& p, Partition const& q);

/// Entries N^{|p v q|} over the given basis.
ExactMatrix gram_matrix(std::vector<Partition> const& basis, long n);

/// Gram matrix of D(word) = category_set(cat, empty, word) at N.
GramData gram(CategorySpec const& cat, ColorWord const& word, long n,
              std::size_t bound = default_gram_bound);

enum class InverseKind { exact, reflexive_pseudo };

struct WeingartenData {
  GramData gram;
  ExactMatrix matrix;
  InverseKind kind = InverseKind::exact;
};

class GramSingular : public std::runtime_error {
 public:
  GramSingular(std::size_t rank, std::size_t dim);
  std::size_t rank() const noexcept { return rank_; }
  std::size_t dim() const noexcept { return dim_; }

 private:
  std::size_t rank_;
  std::size_t dim_;
};

/// Exact inverse when the Gram matrix has full rank. Otherwise throws
/// GramSingular, or with `allow_pseudo` returns the reflexive generalized
/// inverse supported on a maximal independent set of basis elements (only
/// meaningful on the span of the basis).
WeingartenData weingarten(GramData g, bool allow_pseudo = false);

/// Exact Haar integration of coordinate monomials over one group at one N.
/// Weingarten matrices are built once per color word; sums over kernel pairs
/// are memoized. Safe for concurrent callers.
class HaarIntegrator {
 public:
  HaarIntegrator(Group group, long n, bool allow_pseudo = false);
  ~HaarIntegrator();

  Group group() const noexcept { return group_; }
  long n() const noexcept { return n_; }

  Rational moment(MonomialSpec const& m);

  /// Sum of W(p, q) over basis elements p <= row_kernel and q <= col_kernel.
  Rational kernel_sum(Partition const& row_kernel, Partition const& col_kernel);

  WeingartenData const& weingarten_for(ColorWord const& word);

  /// Word used for the monomial: its colors, or all white for real groups.
  ColorWord effective_word(MonomialSpec const& m) const;

 private:
  struct Level;
  Level& level(ColorWord const& word);

  Group group_;
  long n_;
  bool allow_pseudo_;
  std::mutex mutex_;
  std::map<ColorWord, std::unique_ptr<Level>> levels_;
};

/// Integral of u_{i1 j1}^{e1} ... u_{ik jk}^{ek} over the Haar state; twisted
/// groups use the signed Kronecker symbols with the same Weingarten matrix.
Rational haar_moment(Group group, MonomialSpec const& m, long n, bool allow_pseudo = false);

}  // namespace easyq
