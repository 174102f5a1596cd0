#include "gtutte/matrix.hpp"

#include <numeric>
#include <utility>

#include "gtutte/error.hpp"

namespace gtutte {

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

struct Elimination {
  std::size_t rank = 0;
  int sign = 1;
  std::vector<std::size_t> column_order;
};

// Fraction-free Bareiss elimination with full pivoting restricted to the first
// `pivot_cols` columns. Leaves the leading rank x rank block upper triangular;
// the last pivot of a full-rank square block equals the determinant up to sign.
Elimination bareiss(IntMatrix& m, std::size_t pivot_cols) {
  Elimination out;
  const std::size_t rows = m.size();
  const std::size_t width = rows ? m[0].size() : 0;
  out.column_order.resize(pivot_cols);
  std::iota(out.column_order.begin(), out.column_order.end(), 0);
  Integer prev = 1;
  for (std::size_t k = 0; k < std::min(rows, pivot_cols); ++k) {
    std::size_t pr = rows, pc = pivot_cols;
    for (std::size_t c = k; c < pivot_cols && pr == rows; ++c) {
      for (std::size_t r = k; r < rows; ++r) {
        if (m[r][c] != 0) {
          pr = r;
          pc = c;
          break;
        }
      }
    }
    if (pr == rows) break;
    if (pr != k) {
      std::swap(m[pr], m[k]);
      out.sign = -out.sign;
    }
    if (pc != k) {
      for (auto& row : m) std::swap(row[pc], row[k]);
      std::swap(out.column_order[pc], out.column_order[k]);
      out.sign = -out.sign;
    }
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < width; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
    ++out.rank;
  }
  return out;
}

// Scales each row to integers; returns the product of the scale factors.
Integer to_integer_rows(const ExactMatrix& a, const std::vector<Rational>* rhs, IntMatrix& out) {
  Integer scale_product = 1;
  out.assign(a.rows(), {});
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
    if (rhs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*rhs)[r].get_den_mpz_t());
    auto& row = out[r];
    row.reserve(a.cols() + (rhs ? 1 : 0));
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(a(r, c).get_num() * (l / a(r, c).get_den()));
    if (rhs) row.push_back((*rhs)[r].get_num() * (l / (*rhs)[r].get_den()));
    scale_product *= l;
  }
  return scale_product;
}

}  // namespace

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  ExactMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shapes");
  ExactMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::vector<Rational> bareiss_solve(const ExactMatrix& a, const std::vector<Rational>& b) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::NotSquare, "bareiss_solve needs a square matrix");
  if (b.size() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length");
  const std::size_t n = a.rows();
  IntMatrix m;
  to_integer_rows(a, &b, m);
  const Elimination e = bareiss(m, n);
  if (e.rank < n) throw Error(ErrorKind::SingularMatrix, "no nonzero pivot remains");
  std::vector<Rational> y(n);
  for (std::size_t k = n; k-- > 0;) {
    Rational acc(m[k][n]);
    for (std::size_t j = k + 1; j < n; ++j) acc -= Rational(m[k][j]) * y[j];
    y[k] = acc / Rational(m[k][k]);
  }
  std::vector<Rational> x(n);
  for (std::size_t k = 0; k < n; ++k) x[e.column_order[k]] = y[k];
  return x;
}

Rational det_exact(const ExactMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m;
  const Integer scale = to_integer_rows(a, nullptr, m);
  const Elimination e = bareiss(m, n);
  if (e.rank < n) return 0;
  Rational d(m[n - 1][n - 1] * e.sign, scale);
  d.canonicalize();
  return d;
}

std::size_t rank_exact(const ExactMatrix& a) {
  IntMatrix m;
  to_integer_rows(a, nullptr, m);
  return bareiss(m, a.cols()).rank;
}

LaurentPolynomial vandermonde_solve(const std::vector<Rational>& nodes, const std::vector<Rational>& values,
                                    int offset) {
  if (nodes.size() != values.size()) throw Error(ErrorKind::DimensionMismatch, "nodes and values differ in length");
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (nodes[i] == nodes[j]) throw Error(ErrorKind::DuplicateNode, "node " + to_string(nodes[i]) + " repeated");
  const std::size_t n = nodes.size();
  if (n == 0) return {};
  // L(z) = z^offset * p(z); solve the ordinary system for p.
  std::vector<Rational> rhs(n);
  ExactMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (nodes[i] == 0 && offset != 0) {
      throw Error(ErrorKind::DivisionByZero, "zero node with a nonzero exponent offset");
    }
    rhs[i] = offset == 0 ? values[i] : values[i] * power(nodes[i], -offset);
    Rational p = 1;
    for (std::size_t j = 0; j < n; ++j) {
      v(i, j) = p;
      p *= nodes[i];
    }
  }
  const auto c = bareiss_solve(v, rhs);
  LaurentPolynomial out;
  for (std::size_t j = 0; j < n; ++j) out.add_term(static_cast<int>(j) + offset, c[j]);
  return out;
}

}  // namespace gtutte
