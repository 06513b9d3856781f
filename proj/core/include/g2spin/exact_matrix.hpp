#pragma once

// Dense matrices over an exact field and Gauss-Jordan elimination.
//
// The element type T must provide field arithmetic and a free is_zero(const T&).
// Rational and Quadratic both qualify.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "g2spin/scalar.hpp"

namespace g2spin {

inline void sub_mul(Rational& acc, const Rational& a, const Rational& b) { acc -= a * b; }
inline void sub_mul(Quadratic& acc, const Quadratic& a, const Quadratic& b) { acc.sub_mul(a, b); }

template <class T>
using ExactVector = std::vector<T>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0L)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1L);
    return m;
  }

  static Matrix from_columns(const std::vector<ExactVector<T>>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ExactVector<T> column(std::size_t c) const {
    ExactVector<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!g2spin::is_zero(x)) return false;
    return true;
  }

  T trace() const {
    T t(0L);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (g2spin::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (g2spin::is_zero(b(k, j))) continue;
          p(i, j) += aik * b(k, j);
        }
      }
    return p;
  }

  friend ExactVector<T> operator*(const Matrix& a, const ExactVector<T>& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    ExactVector<T> out(a.rows_, T(0L));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (g2spin::is_zero(a(i, k)) || g2spin::is_zero(v[k])) continue;
        out[i] += a(i, k) * v[k];
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
struct Echelon {
  Matrix<T> reduced;                // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination; exact, first-nonzero pivoting.
template <class T>
Echelon<T> row_reduce(Matrix<T> m) {
  Echelon<T> out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    const T inv = T(1L) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const T factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (is_zero(m(row, c))) continue;
        sub_mul(m(r, c), factor, m(row, c));
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return row_reduce(m).rank();
}

/// Basis of {v : m v = 0}; one vector per free column, with a 1 in that slot.
template <class T>
std::vector<ExactVector<T>> exact_kernel(const Matrix<T>& m) {
  const Echelon<T> e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<ExactVector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ExactVector<T> v(m.cols(), T(0L));
    v[free] = T(1L);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
bool is_zero_vector(const ExactVector<T>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

/// Rank of the span of the given vectors, all of length `dim`.
template <class T>
std::size_t span_rank(const std::vector<ExactVector<T>>& vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return rank(Matrix<T>::from_columns(vectors, dim));
}

template <class T>
Matrix<Quadratic> to_quadratic(const Matrix<T>& m) {
  Matrix<Quadratic> q(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) q(r, c) = Quadratic(m(r, c));
  return q;
}

inline std::string format_vector(const ExactVector<Rational>& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << to_string(v[i]);
  out << ']';
  return out.str();
}

}  // namespace g2spin
