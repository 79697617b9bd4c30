#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "kwise/numeric.hpp"

namespace kwise {

/// Small dense row-major matrix for exact (or high-precision) algebra.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Copy with row `row` and column `col` removed.
  Matrix minor(std::size_t row, std::size_t col) const {
    Matrix out(rows_ - 1, cols_ - 1);
    for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
      if (r == row) continue;
      for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
        if (c == col) continue;
        out(rr, cc++) = (*this)(r, c);
      }
      ++rr;
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Fraction-free (Bareiss) determinant. T must support exact division of
/// the intermediate products by the previous pivot, which holds for any
/// integral domain (integers, rationals, polynomial rings).
template <class T, class DivExact>
T bareiss_determinant(Matrix<T> m, DivExact div_exact) {
  const std::size_t n = m.rows();
  if (n != m.cols()) fail(ErrorCode::dimension_mismatch, "determinant of a non-square matrix");
  if (n == 0) return T(1);
  bool negate = false;
  T prev(1);
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (m(p, p) == T(0)) {
      std::size_t swap = p + 1;
      while (swap < n && m(swap, p) == T(0)) ++swap;
      if (swap == n) return T(0);
      for (std::size_t c = 0; c < n; ++c) std::swap(m(p, c), m(swap, c));
      negate = !negate;
    }
    for (std::size_t i = p + 1; i < n; ++i) {
      for (std::size_t j = p + 1; j < n; ++j) {
        m(i, j) = div_exact(m(i, j) * m(p, p) - m(i, p) * m(p, j), prev);
      }
      m(i, p) = T(0);
    }
    prev = m(p, p);
  }
  T det = m(n - 1, n - 1);
  return negate ? T(T(0) - det) : det;
}

inline Rational determinant(const Matrix<Rational>& m) {
  return bareiss_determinant(m, [](const Rational& a, const Rational& b) { return Rational(a / b); });
}

/// Gauss-Jordan inverse over a field; throws ErrorCode::singular.
template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) fail(ErrorCode::dimension_mismatch, "inverse of a non-square matrix");
  Matrix<T> a = m;
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = T(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == T(0)) ++piv;
    if (piv == n) fail(ErrorCode::singular, "matrix is singular");
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    }
    const T p = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= p;
      inv(c, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == T(0)) continue;
      const T f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

}  // namespace kwise
