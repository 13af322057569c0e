#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "conecert/errors.hpp"
#include "conecert/matrix.hpp"

namespace conecert {

namespace detail {

struct LuFactors {
  Matrix lu;                     // packed L (unit diagonal) and U
  std::vector<std::size_t> perm; // row permutation
  bool singular = false;
  int sign = 1;                  // permutation sign
};

inline LuFactors lu_factor(Matrix a, double pivot_tol = 1e-13) {
  if (!a.is_square()) fail(errc::dimension_mismatch, "LU needs a square matrix");
  const std::size_t n = a.rows();
  const double scale = std::max(1.0, a.max_abs());
  LuFactors f{std::move(a), {}, false, 1};
  f.perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) f.perm[i] = i;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(f.lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      double v = std::abs(f.lu(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best <= pivot_tol * scale) {
      f.singular = true;
      return f;
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(f.lu(k, j), f.lu(piv, j));
      std::swap(f.perm[k], f.perm[piv]);
      f.sign = -f.sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      double m = f.lu(i, k) / f.lu(k, k);
      f.lu(i, k) = m;
      for (std::size_t j = k + 1; j < n; ++j) f.lu(i, j) -= m * f.lu(k, j);
    }
  }
  return f;
}

inline Vector lu_apply(const LuFactors& f, const Vector& b) {
  const std::size_t n = f.lu.rows();
  Vector y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[f.perm[i]];
    for (std::size_t j = 0; j < i; ++j) s -= f.lu(i, j) * y[j];
    y[i] = s;
  }
  for (std::size_t ii = n; ii-- > 0;) {
    double s = y[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= f.lu(ii, j) * y[j];
    y[ii] = s / f.lu(ii, ii);
  }
  return y;
}

}  // namespace detail

/// Solve A x = b by LU with partial pivoting.
inline Vector lu_solve(const Matrix& a, const Vector& b) {
  if (a.rows() != b.dim())
    fail(errc::dimension_mismatch, "right-hand side dimension mismatch");
  auto f = detail::lu_factor(a);
  if (f.singular) fail(errc::singular_matrix, "linear system is singular");
  return detail::lu_apply(f, b);
}

/// Solve A X = B columnwise.
inline Matrix solve_matrix(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows())
    fail(errc::dimension_mismatch, "right-hand side shape mismatch");
  auto f = detail::lu_factor(a);
  if (f.singular) fail(errc::singular_matrix, "linear system is singular");
  Matrix x(a.cols(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j)
    x.set_column(j, detail::lu_apply(f, b.column(j)));
  return x;
}

inline Matrix inverse(const Matrix& a) {
  return solve_matrix(a, Matrix::identity(a.rows()));
}

inline double determinant(const Matrix& a) {
  auto f = detail::lu_factor(a);
  if (f.singular) return 0.0;
  double d = f.sign;
  for (std::size_t i = 0; i < a.rows(); ++i) d *= f.lu(i, i);
  return d;
}

}  // namespace conecert
