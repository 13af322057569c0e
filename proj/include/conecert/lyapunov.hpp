#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "conecert/eig.hpp"
#include "conecert/errors.hpp"
#include "conecert/matrix.hpp"
#include "conecert/solve.hpp"

namespace conecert {

/// Outcome of the Lyapunov-equation stability test for A.
///
/// A is Hurwitz iff the Kronecker system for A^T P + P A = -I is nonsingular
/// and its (symmetrized) solution P is positive definite: a singular system
/// means some eigenvalue pair satisfies lambda_i + lambda_j = 0, which already
/// rules out all eigenvalues lying in the open left half plane.
struct StabilityInfo {
  bool stable = false;
  bool lyapunov_singular = false;  // diagnostic, reported as not stable
  Matrix solution;                 // P with A^T P + P A = -I (when nonsingular)
  double solution_lambda_min = 0.0;
};

inline StabilityInfo stability_info(const Matrix& a, double tol = kDefaultTol) {
  if (!a.is_square()) fail(errc::dimension_mismatch, "matrix not square");
  const std::size_t n = a.rows();
  const std::size_t nn = n * n;

  // Column-major vec: vec(P)_{i + n j} = P_ij.
  // vec(A^T P + P A) = (I (x) A^T + A^T (x) I) vec(P).
  Matrix k(nn, nn);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        k(i + n * j, l + n * j) += a(l, i);  // delta_jl * A_li
        k(i + n * j, i + n * l) += a(l, j);  // delta_ik * A_lj
      }
  Vector rhs(nn);
  for (std::size_t i = 0; i < n; ++i) rhs[i + n * i] = -1.0;

  auto f = detail::lu_factor(k, 1e-12);
  StabilityInfo info;
  if (f.singular) {
    info.lyapunov_singular = true;
    return info;
  }
  Vector p_vec = detail::lu_apply(f, rhs);
  Matrix p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(i, j) = p_vec[i + n * j];
  info.solution = symmetrize(p);
  auto ex = sym_eig_extremes(info.solution);
  info.solution_lambda_min = ex.lambda_min;
  double norm = std::max(std::abs(ex.lambda_min), std::abs(ex.lambda_max));
  info.stable = ex.lambda_min > tol * std::max(1.0, norm);
  return info;
}

/// Hurwitz stability: every eigenvalue of A has negative real part.
inline bool is_stable(const Matrix& a, double tol = kDefaultTol) {
  return stability_info(a, tol).stable;
}

}  // namespace conecert
