#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "easyq/rational.hpp"

namespace easyq {

/// Dense row-major matrix over the rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  Rational const& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::vector<Rational> const& entries() const noexcept { return entries_; }

  ExactMatrix transpose() const;
  Rational trace() const;
  bool is_symmetric() const;

  ExactMatrix& operator+=(ExactMatrix const& other);
  ExactMatrix& operator-=(ExactMatrix const& other);
  ExactMatrix& operator*=(Rational const& scalar);

  friend ExactMatrix operator+(ExactMatrix lhs, ExactMatrix const& rhs) { return lhs += rhs; }
  friend ExactMatrix operator-(ExactMatrix lhs, ExactMatrix const& rhs) { return lhs -= rhs; }
  friend ExactMatrix operator*(ExactMatrix lhs, Rational const& s) { return lhs *= s; }
  friend ExactMatrix operator*(Rational const& s, ExactMatrix rhs) { return rhs *= s; }
  friend ExactMatrix operator*(ExactMatrix const& lhs, ExactMatrix const& rhs);

  friend bool operator==(ExactMatrix const&, ExactMatrix const&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Kronecker product, first factor most significant.
ExactMatrix kron(ExactMatrix const& a, ExactMatrix const& b);

std::size_t rank(ExactMatrix const& m);

/// Indices of a maximal linearly independent set of columns, chosen greedily left to right.
std::vector<std::size_t> independent_columns(ExactMatrix const& m);

/// Gauss-Jordan inverse; nullopt when singular.
std::optional<ExactMatrix> inverse(ExactMatrix const& m);

Rational determinant(ExactMatrix const& m);

ExactMatrix submatrix(ExactMatrix const& m, std::vector<std::size_t> const& rows,
                      std::vector<std::size_t> const& cols);

}  // namespace easyq
