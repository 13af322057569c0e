#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "conecert/errors.hpp"

namespace conecert {

/// Dense real vector. Entries are checked finite at construction.
class Vector {
 public:
  Vector() = default;

  explicit Vector(std::size_t n, double fill = 0.0) : v_(n, fill) {
    check_finite(fill);
  }

  Vector(std::initializer_list<double> init) : v_(init) {
    for (double x : v_) check_finite(x);
  }

  explicit Vector(std::vector<double> entries) : v_(std::move(entries)) {
    for (double x : v_) check_finite(x);
  }

  std::size_t dim() const { return v_.size(); }

  double operator[](std::size_t i) const { return v_[i]; }
  double& operator[](std::size_t i) { return v_[i]; }

  const std::vector<double>& entries() const { return v_; }

  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  Vector& operator+=(const Vector& o) {
    require_same_dim(o);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
  }
  Vector& operator-=(const Vector& o) {
    require_same_dim(o);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
  }
  Vector& operator*=(double s) {
    for (double& x : v_) x *= s;
    return *this;
  }

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(double s, Vector a) { return a *= s; }
  friend Vector operator*(Vector a, double s) { return a *= s; }
  friend Vector operator-(Vector a) { return a *= -1.0; }

  double dot(const Vector& o) const {
    require_same_dim(o);
    double s = 0.0;
    for (std::size_t i = 0; i < v_.size(); ++i) s += v_[i] * o.v_[i];
    return s;
  }

  double norm2() const { return std::sqrt(dot(*this)); }

  double norm_inf() const {
    double m = 0.0;
    for (double x : v_) m = std::max(m, std::abs(x));
    return m;
  }

  double min_entry() const {
    double m = v_.empty() ? 0.0 : v_[0];
    for (double x : v_) m = std::min(m, x);
    return m;
  }

 private:
  static void check_finite(double x) {
    if (!std::isfinite(x)) fail(errc::nonfinite_entry, "vector entry not finite");
  }
  void require_same_dim(const Vector& o) const {
    if (v_.size() != o.v_.size())
      fail(errc::dimension_mismatch, "vector dimensions differ");
  }

  std::vector<double> v_;
};

inline double dot(const Vector& a, const Vector& b) { return a.dot(b); }

/// Dense real matrix, row-major. Entries are checked finite at construction.
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), e_(rows * cols, fill) {
    check_finite(fill);
  }

  Matrix(std::initializer_list<std::initializer_list<double>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_)
        fail(errc::dimension_mismatch, "ragged matrix initializer");
      for (double x : row) {
        check_finite(x);
        e_.push_back(x);
      }
    }
  }

  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
      : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_)
      fail(errc::dimension_mismatch, "entry count does not match shape");
    for (double x : e_) check_finite(x);
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix diagonal(const Vector& d) {
    Matrix m(d.dim(), d.dim());
    for (std::size_t i = 0; i < d.dim(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  double operator()(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) {
    return e_[i * cols_ + j];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vector column(std::size_t j) const {
    Vector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  void set_column(std::size_t j, const Vector& c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
  }

  Vector diagonal_vector() const {
    std::size_t n = std::min(rows_, cols_);
    Vector d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = (*this)(i, i);
    return d;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
  }
  Matrix& operator*=(double s) {
    for (double& x : e_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(double s, Matrix a) { return a *= s; }
  friend Matrix operator*(Matrix a, double s) { return a *= s; }
  friend Matrix operator-(Matrix a) { return a *= -1.0; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      fail(errc::dimension_mismatch, "matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        double aik = a(i, k);
        if (aik == 0.0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Vector operator*(const Matrix& a, const Vector& x) {
    if (a.cols_ != x.dim())
      fail(errc::dimension_mismatch, "matrix-vector shape mismatch");
    Vector y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < a.cols_; ++j) s += a(i, j) * x[j];
      y[i] = s;
    }
    return y;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (double x : e_) s += x * x;
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0.0;
    for (double x : e_) m = std::max(m, std::abs(x));
    return m;
  }

 private:
  static void check_finite(double x) {
    if (!std::isfinite(x)) fail(errc::nonfinite_entry, "matrix entry not finite");
  }
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      fail(errc::dimension_mismatch, "matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> e_;
};

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(errc::dimension_mismatch, "matrix shapes differ");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

inline double max_abs_diff(const Vector& a, const Vector& b) {
  if (a.dim() != b.dim()) fail(errc::dimension_mismatch, "vector dims differ");
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

/// Max |S_ij - S_ji| over all pairs; 0 for non-square never applies (throws).
inline double symmetry_defect(const Matrix& s) {
  if (!s.is_square()) fail(errc::dimension_mismatch, "matrix not square");
  double m = 0.0;
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = i + 1; j < s.cols(); ++j)
      m = std::max(m, std::abs(s(i, j) - s(j, i)));
  return m;
}

inline bool is_symmetric(const Matrix& s, double tol = kDefaultTol) {
  return symmetry_defect(s) <= tol * std::max(1.0, s.frobenius_norm());
}

inline Matrix symmetrize(const Matrix& s) {
  if (!s.is_square()) fail(errc::dimension_mismatch, "matrix not square");
  Matrix h(s.rows(), s.cols());
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      h(i, j) = 0.5 * (s(i, j) + s(j, i));
  return h;
}

}  // namespace conecert
