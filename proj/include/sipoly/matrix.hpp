#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "sipoly/errors.hpp"
#include "sipoly/scalar.hpp"

namespace sipoly {

/// Small dense row-major matrix over Complex or GaussRational.
template <Scalar S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S{}) {}
  Matrix(std::initializer_list<std::initializer_list<S>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DomainError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = from_ratio<S>(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& operator()(std::size_t i, std::size_t k) { return data_[i * cols_ + k]; }
  const S& operator()(std::size_t i, std::size_t k) const { return data_[i * cols_ + k]; }

  Matrix conj_transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) t(k, i) = conj((*this)(i, k));
    return t;
  }
  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) t(k, i) = (*this)(i, k);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t j = 0; j < data_.size(); ++j) data_[j] += o.data_[j];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t j = 0; j < data_.size(); ++j) data_[j] -= o.data_[j];
    return *this;
  }
  Matrix& operator*=(const S& s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
  friend Matrix operator*(const S& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product: dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) {
        if (is_zero(a(i, j))) continue;
        for (std::size_t k = 0; k < b.cols_; ++k) c(i, k) += a(i, j) * b(j, k);
      }
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  const std::vector<S>& data() const { return data_; }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix sum: dimension mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

template <Scalar S>
double frobenius_norm(const Matrix<S>& m) {
  double acc = 0.0;
  for (const auto& v : m.data()) {
    const double a = magnitude(v);
    acc += a * a;
  }
  return std::sqrt(acc);
}

/// Maximum absolute row sum.
template <Scalar S>
double inf_norm(const Matrix<S>& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double row = 0.0;
    for (std::size_t k = 0; k < m.cols(); ++k) row += magnitude(m(i, k));
    best = std::max(best, row);
  }
  return best;
}

inline Matrix<Complex> to_float(const Matrix<GaussRational>& m) {
  Matrix<Complex> f(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) f(i, k) = m(i, k).to_complex();
  return f;
}
inline Matrix<Complex> to_float(const Matrix<Complex>& m) { return m; }

}  // namespace sipoly
