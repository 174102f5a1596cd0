#pragma once

#include <cstddef>
#include <vector>

#include "gtutte/polynomial.hpp"
#include "gtutte/rational.hpp"

namespace gtutte {

/// Dense row-major matrix of exact rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Solves Ax = b by fraction-free Bareiss elimination with full pivoting.
/// Each row of [A|b] is first scaled to integers. Throws NotSquare,
/// DimensionMismatch or SingularMatrix.
std::vector<Rational> bareiss_solve(const ExactMatrix& a, const std::vector<Rational>& b);

/// Exact determinant via the same integer elimination. Throws NotSquare.
Rational det_exact(const ExactMatrix& a);

/// Rank over the rationals.
std::size_t rank_exact(const ExactMatrix& a);

/// Returns L(z) = sum_j c_j z^(j + offset), j = 0..n-1, with L(nodes[i]) = values[i].
/// Throws DuplicateNode, DimensionMismatch, or DivisionByZero for a zero node
/// combined with a negative offset.
LaurentPolynomial vandermonde_solve(const std::vector<Rational>& nodes, const std::vector<Rational>& values,
                                    int offset = 0);

}  // namespace gtutte
