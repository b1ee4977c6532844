// Copyright (c) 2026 the sokit authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <initializer_list>
#include <utility>
#include <vector>

#include "sokit/common.hpp"

namespace sokit {

template <typename T>
class Vector;

/// Dense column-major matrix over double or std::complex<double>.
template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(index_t rows, index_t cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), T{}) {
    assert(rows >= 0 && cols >= 0);
  }

  /// Row-major brace initialization, e.g. Matrix<double>({{0,1},{1,0}}).
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = static_cast<index_t>(rows.size());
    cols_ = rows_ > 0 ? static_cast<index_t>(rows.begin()->size()) : 0;
    data_.assign(static_cast<std::size_t>(rows_ * cols_), T{});
    index_t i = 0;
    for (const auto& row : rows) {
      assert(static_cast<index_t>(row.size()) == cols_);
      index_t j = 0;
      for (const T& v : row) (*this)(i, j++) = v;
      ++i;
    }
  }

  static Matrix identity(index_t n) {
    Matrix m(n, n);
    for (index_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  index_t rows() const { return rows_; }
  index_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(index_t i, index_t j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return data_[static_cast<std::size_t>(j * rows_ + i)];
  }
  const T& operator()(index_t i, index_t j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return data_[static_cast<std::size_t>(j * rows_ + i)];
  }

  T* col_data(index_t j) { return data_.data() + j * rows_; }
  const T* col_data(index_t j) const { return data_.data() + j * rows_; }

  Vector<T> col(index_t j) const;
  void set_col(index_t j, const Vector<T>& v);

  /// Grows by one column (contiguous in column-major storage).
  void append_col(const Vector<T>& v);

  /// Grows by one zero row, preserving existing entries.
  void append_zero_row() {
    Matrix grown(rows_ + 1, cols_);
    for (index_t j = 0; j < cols_; ++j)
      std::copy(col_data(j), col_data(j) + rows_, grown.col_data(j));
    *this = std::move(grown);
  }

  /// Leading rows0 x cols0 block.
  Matrix block(index_t rows0, index_t cols0) const {
    assert(rows0 <= rows_ && cols0 <= cols_);
    Matrix b(rows0, cols0);
    for (index_t j = 0; j < cols0; ++j)
      std::copy(col_data(j), col_data(j) + rows0, b.col_data(j));
    return b;
  }

  const std::vector<T>& data() const { return data_; }

 private:
  index_t rows_ = 0;
  index_t cols_ = 0;
  std::vector<T> data_;
};

template <typename T>
class Vector {
 public:
  using value_type = T;

  Vector() = default;
  explicit Vector(index_t n) : data_(static_cast<std::size_t>(n), T{}) {}
  Vector(std::initializer_list<T> vals) : data_(vals) {}

  static Vector unit(index_t n, index_t i) {
    Vector v(n);
    v[i] = T{1};
    return v;
  }

  index_t size() const { return static_cast<index_t>(data_.size()); }
  bool empty() const { return data_.empty(); }

  T& operator[](index_t i) {
    assert(i >= 0 && i < size());
    return data_[static_cast<std::size_t>(i)];
  }
  const T& operator[](index_t i) const {
    assert(i >= 0 && i < size());
    return data_[static_cast<std::size_t>(i)];
  }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }

  Vector head(index_t n) const {
    assert(n <= size());
    Vector h(n);
    std::copy(data_.begin(), data_.begin() + n, h.data_.begin());
    return h;
  }

  void push_back(const T& v) { data_.push_back(v); }

  Vector& operator+=(const Vector& o) {
    assert(size() == o.size());
    for (index_t i = 0; i < size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Vector& operator-=(const Vector& o) {
    assert(size() == o.size());
    for (index_t i = 0; i < size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Vector& operator*=(const T& a) {
    for (auto& v : data_) v *= a;
    return *this;
  }

 private:
  std::vector<T> data_;
};

template <typename T>
Vector<T> Matrix<T>::col(index_t j) const {
  Vector<T> v(rows_);
  std::copy(col_data(j), col_data(j) + rows_, v.data());
  return v;
}

template <typename T>
void Matrix<T>::set_col(index_t j, const Vector<T>& v) {
  assert(v.size() == rows_);
  std::copy(v.data(), v.data() + rows_, col_data(j));
}

template <typename T>
void Matrix<T>::append_col(const Vector<T>& v) {
  if (cols_ == 0 && rows_ == 0) rows_ = v.size();
  assert(v.size() == rows_);
  data_.insert(data_.end(), v.data(), v.data() + rows_);
  ++cols_;
}

// ---------------------------------------------------------------------------
// Free-function kernels. All sequential and deterministic.
// ---------------------------------------------------------------------------

template <typename T>
Vector<T> operator+(Vector<T> a, const Vector<T>& b) {
  a += b;
  return a;
}
template <typename T>
Vector<T> operator-(Vector<T> a, const Vector<T>& b) {
  a -= b;
  return a;
}
template <typename T>
Vector<T> operator*(const T& s, Vector<T> v) {
  v *= s;
  return v;
}

/// Conjugated inner product x^* y.
template <typename T>
T dot(const Vector<T>& x, const Vector<T>& y) {
  assert(x.size() == y.size());
  T acc{};
  for (index_t i = 0; i < x.size(); ++i) acc += conj_if(x[i]) * y[i];
  return acc;
}

template <typename T>
double norm2(const Vector<T>& x) {
  double acc = 0.0;
  for (index_t i = 0; i < x.size(); ++i) {
    const double a = abs_val(x[i]);
    acc += a * a;
  }
  return std::sqrt(acc);
}

template <typename T>
void axpy(const T& a, const Vector<T>& x, Vector<T>& y) {
  assert(x.size() == y.size());
  for (index_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

template <typename T>
Vector<T> matvec(const Matrix<T>& a, const Vector<T>& x) {
  if (a.cols() != x.size())
    throw invalid_input("matvec: dimension mismatch");
  Vector<T> y(a.rows());
  for (index_t j = 0; j < a.cols(); ++j) {
    const T xj = x[j];
    const T* cj = a.col_data(j);
    for (index_t i = 0; i < a.rows(); ++i) y[i] += cj[i] * xj;
  }
  return y;
}

/// y = A^* x.
template <typename T>
Vector<T> matvec_adjoint(const Matrix<T>& a, const Vector<T>& x) {
  if (a.rows() != x.size())
    throw invalid_input("matvec_adjoint: dimension mismatch");
  Vector<T> y(a.cols());
  for (index_t j = 0; j < a.cols(); ++j) {
    const T* cj = a.col_data(j);
    T acc{};
    for (index_t i = 0; i < a.rows(); ++i) acc += conj_if(cj[i]) * x[i];
    y[j] = acc;
  }
  return y;
}

template <typename T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows())
    throw invalid_input("matmul: dimension mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (index_t j = 0; j < b.cols(); ++j) {
    for (index_t l = 0; l < a.cols(); ++l) {
      const T blj = b(l, j);
      const T* al = a.col_data(l);
      T* cj = c.col_data(j);
      for (index_t i = 0; i < a.rows(); ++i) cj[i] += al[i] * blj;
    }
  }
  return c;
}

template <typename T>
Matrix<T> adjoint(const Matrix<T>& a) {
  Matrix<T> t(a.cols(), a.rows());
  for (index_t j = 0; j < a.cols(); ++j)
    for (index_t i = 0; i < a.rows(); ++i) t(j, i) = conj_if(a(i, j));
  return t;
}

template <typename T>
Matrix<T> operator-(Matrix<T> a, const Matrix<T>& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  for (index_t j = 0; j < a.cols(); ++j)
    for (index_t i = 0; i < a.rows(); ++i) a(i, j) -= b(i, j);
  return a;
}

template <typename T>
Matrix<T> operator+(Matrix<T> a, const Matrix<T>& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  for (index_t j = 0; j < a.cols(); ++j)
    for (index_t i = 0; i < a.rows(); ++i) a(i, j) += b(i, j);
  return a;
}

template <typename T>
Matrix<T> scaled(Matrix<T> a, const T& s) {
  for (index_t j = 0; j < a.cols(); ++j)
    for (index_t i = 0; i < a.rows(); ++i) a(i, j) *= s;
  return a;
}

template <typename T>
double norm_fro(const Matrix<T>& a) {
  double acc = 0.0;
  for (index_t j = 0; j < a.cols(); ++j)
    for (index_t i = 0; i < a.rows(); ++i) {
      const double v = abs_val(a(i, j));
      acc += v * v;
    }
  return std::sqrt(acc);
}

template <typename T>
double max_abs(const Matrix<T>& a) {
  double m = 0.0;
  for (index_t j = 0; j < a.cols(); ++j)
    for (index_t i = 0; i < a.rows(); ++i) m = std::max(m, abs_val(a(i, j)));
  return m;
}

template <typename T>
bool all_finite(const Matrix<T>& a) {
  for (index_t j = 0; j < a.cols(); ++j)
    for (index_t i = 0; i < a.rows(); ++i)
      if (!std::isfinite(abs_val(a(i, j)))) return false;
  return true;
}

template <typename T>
bool all_finite(const Vector<T>& v) {
  for (index_t i = 0; i < v.size(); ++i)
    if (!std::isfinite(abs_val(v[i]))) return false;
  return true;
}

/// Stacks a on top of b (column counts must match).
template <typename T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
  assert(a.cols() == b.cols());
  Matrix<T> s(a.rows() + b.rows(), a.cols());
  for (index_t j = 0; j < a.cols(); ++j) {
    std::copy(a.col_data(j), a.col_data(j) + a.rows(), s.col_data(j));
    std::copy(b.col_data(j), b.col_data(j) + b.rows(), s.col_data(j) + a.rows());
  }
  return s;
}

template <typename T>
Vector<T> vcat(const Vector<T>& a, const Vector<T>& b) {
  Vector<T> s(a.size() + b.size());
  std::copy(a.data(), a.data() + a.size(), s.data());
  std::copy(b.data(), b.data() + b.size(), s.data() + a.size());
  return s;
}

inline Matrix<std::complex<double>> to_complex(const Matrix<double>& a) {
  Matrix<std::complex<double>> c(a.rows(), a.cols());
  for (index_t j = 0; j < a.cols(); ++j)
    for (index_t i = 0; i < a.rows(); ++i) c(i, j) = a(i, j);
  return c;
}

inline Vector<std::complex<double>> to_complex(const Vector<double>& v) {
  Vector<std::complex<double>> c(v.size());
  for (index_t i = 0; i < v.size(); ++i) c[i] = v[i];
  return c;
}

}  // namespace sokit
