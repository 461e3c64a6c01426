#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "witt/poly.hpp"

namespace witt {

/// Dense row-major matrix over a field R (R needs + - * /, is_zero, zero_like, one_like).
template <class R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const R& zero)
      : rows_(rows), cols_(cols), data_(rows * cols, zero_like(zero)), zero_(zero_like(zero)) {}

  static Matrix identity(std::size_t n, const R& zero) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(zero);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const R& zero_elem() const { return zero_; }

  R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix c(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (detail::elem_is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = c(i, j) + a(i, k) * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!(a.data_[i] == b.data_[i])) return false;
    return true;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i != j && !detail::elem_is_zero((*this)(i, j))) return false;
    return true;
  }

  R determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    Matrix m = *this;
    R det = one_like(zero_);
    const std::size_t n = rows_;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && detail::elem_is_zero(m(p, c))) ++p;
      if (p == n) return zero_;
      if (p != c) {
        for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
        det = -det;
      }
      det = det * m(c, c);
      const R inv = one_like(zero_) / m(c, c);
      for (std::size_t r = c + 1; r < n; ++r) {
        if (detail::elem_is_zero(m(r, c))) continue;
        const R f = m(r, c) * inv;
        for (std::size_t j = c; j < n; ++j) m(r, j) = m(r, j) - f * m(c, j);
      }
    }
    return det;
  }

  /// Inverse by Gauss-Jordan; throws std::domain_error if singular.
  Matrix inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = rows_;
    Matrix m = *this, inv = identity(n, zero_);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && detail::elem_is_zero(m(p, c))) ++p;
      if (p == n) throw std::domain_error("singular matrix");
      if (p != c)
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(m(p, j), m(c, j));
          std::swap(inv(p, j), inv(c, j));
        }
      const R s = one_like(zero_) / m(c, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(c, j) = m(c, j) * s;
        inv(c, j) = inv(c, j) * s;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || detail::elem_is_zero(m(r, c))) continue;
        const R f = m(r, c);
        for (std::size_t j = 0; j < n; ++j) {
          m(r, j) = m(r, j) - f * m(c, j);
          inv(r, j) = inv(r, j) - f * inv(c, j);
        }
      }
    }
    return inv;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<R> data_;
  R zero_{};
};

using QMatrix = Matrix<Rational>;

}  // namespace witt
