#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

#include "conecert/cone.hpp"
#include "conecert/eig.hpp"
#include "conecert/errors.hpp"
#include "conecert/lyapunov.hpp"
#include "conecert/matrix.hpp"
#include "conecert/qm.hpp"

namespace conecert {

/// The self-adjoint diffusive map sending v to w on a cone with orthonormal
/// generators: with O the generator matrix, D = O diag((O^T w)_i / (O^T v)_i) O^T.
/// Both v and w must be interior; coordinates of v below 1e-12 are refused
/// rather than turned into huge ratios. The result is verified to satisfy
/// D v = w to 1e-10 relative before returning.
inline Matrix assumption_d_map(const ConeModel& k, const Vector& v,
                               const Vector& w, double tol = kDefaultTol) {
  if (!k.is_simplicial() || !k.has_orthonormal_generators())
    fail(errc::unsupported_cone,
         "the coefficient-ratio construction needs orthonormal generators "
         "(orthant or rotated orthant)");
  if (membership(k, v, tol).classification != Membership::interior)
    fail(errc::not_interior, "v is not interior");
  if (membership(k, w, tol).classification != Membership::interior)
    fail(errc::not_interior, "w is not interior");

  const Matrix& o = k.generator_matrix();
  const std::size_t n = k.order();
  Vector a = o.transpose() * v;
  Vector b = o.transpose() * w;
  Vector ratio(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] < 1e-12)
      fail(errc::not_interior, "v coordinate " + std::to_string(i) +
                                   " below the interior floor");
    ratio[i] = b[i] / a[i];
  }
  Matrix d = symmetrize(o * Matrix::diagonal(ratio) * o.transpose());

  Vector dv = d * v;
  if (max_abs_diff(dv, w) > 1e-10 * std::max(1.0, w.norm_inf()))
    fail(errc::internal_verification_failed, "constructed map misses D v = w");
  return d;
}

/// 2n x 2n block operator [[A^T D + D A + Q, B^T D], [D B, -Q]].
inline Matrix assemble_block(const Matrix& a, const Matrix& b, const Matrix& d,
                             const Matrix& q) {
  const std::size_t n = a.rows();
  if (!a.is_square() || !b.is_square() || !d.is_square() || !q.is_square() ||
      b.rows() != n || d.rows() != n || q.rows() != n)
    fail(errc::dimension_mismatch, "block assembly needs four n x n matrices");

  Matrix top_left = a.transpose() * d + d * a + q;
  Matrix top_right = b.transpose() * d;
  Matrix bottom_left = d * b;
  Matrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = top_left(i, j);
      m(i, n + j) = top_right(i, j);
      m(n + i, j) = bottom_left(i, j);
      m(n + i, n + j) = -q(i, j);
    }
  return m;
}

/// Diffusive Lyapunov certificate: symmetric positive definite D acting
/// diffusively on K with A^T D + D A negative definite.
struct LyapunovCertificate {
  Matrix d;
  Vector v;         // interior witness with -A v interior
  Vector w;         // interior witness with -A^T w interior
  double residual;  // lambda_max(A^T D + D A), negative
};

inline LyapunovCertificate lyapunov_diffusive(const Matrix& a,
                                              const ConeModel& k,
                                              double tol = kDefaultTol) {
  if (!is_qm(a, k, tol).verdict)
    fail(errc::not_quasi_monotone, "A is not quasi-monotone on K");
  if (!is_stable(a, tol)) fail(errc::not_stable, "A is not stable");

  auto wv = stability_witness(a, k, tol);
  auto ww = stability_witness(adjoint(a), k, tol);
  if (!wv || !ww)
    fail(errc::internal_verification_failed,
         "no interior witness found for a stable quasi-monotone map");

  Matrix d = assumption_d_map(k, wv->v, ww->v, tol);

  if (symmetry_defect(d) > 1e-9 * std::max(1.0, d.frobenius_norm()))
    fail(errc::internal_verification_failed, "certificate D is not symmetric");
  if (!is_diffusive(d, k, tol).verdict)
    fail(errc::internal_verification_failed, "certificate D is not diffusive");
  if (!is_positive_definite(d, tol))
    fail(errc::internal_verification_failed,
         "certificate D is not positive definite");

  Matrix s = a.transpose() * d + d * a;
  double residual = sym_eig_extremes(s).lambda_max;
  if (!is_negative_definite(s, tol))
    fail(errc::internal_verification_failed,
         "Lyapunov residual not negative definite (lambda_max " +
             std::to_string(residual) + ")");
  return LyapunovCertificate{std::move(d), std::move(wv->v), std::move(ww->v),
                             residual};
}

/// Diffusive Riccati certificate: diffusive D, Q with the assembled block
/// operator negative definite. The defining identity M (v, v) = (-w/2, -w/2)
/// is re-verified to 1e-8 relative before the certificate is returned.
struct RiccatiCertificate {
  Matrix d;
  Matrix q;
  Vector v;
  Vector w;
  double residual;  // lambda_max of the assembled block, negative
};

inline RiccatiCertificate riccati_diffusive(const Matrix& a, const Matrix& b,
                                            const ConeModel& k,
                                            double tol = kDefaultTol) {
  if (!is_qm(a, k, tol).verdict)
    fail(errc::not_quasi_monotone, "A is not quasi-monotone on K");
  if (!is_k_nonnegative(b, k, tol).verdict)
    fail(errc::not_k_nonnegative, "B is not K-nonnegative");
  Matrix closed = a + b;
  if (!is_stable(closed, tol)) fail(errc::not_stable, "A + B is not stable");

  Matrix d = lyapunov_diffusive(closed, k, tol).d;

  // S = (A+B)^T D + D (A+B) is QM (products of QM and diffusive maps) and
  // stable, so it admits an interior witness of its own.
  Matrix s = symmetrize(closed.transpose() * d + d * closed);
  auto sv = stability_witness(s, k, tol);
  if (!sv)
    fail(errc::internal_verification_failed,
         "no interior witness for the Lyapunov residual operator");
  Vector v = sv->v;
  Vector w = -(s * v);

  Vector rhs = d * (b * v) + 0.5 * w;
  if (membership(k, rhs, tol).classification != Membership::interior)
    fail(errc::internal_verification_failed,
         "D B v + w/2 failed the interior check");
  Matrix q = assumption_d_map(k, v, rhs, tol);

  if (!is_diffusive(d, k, tol).verdict || !is_diffusive(q, k, tol).verdict)
    fail(errc::internal_verification_failed,
         "certificate pair is not diffusive");

  Matrix m = assemble_block(a, b, d, q);
  double residual = sym_eig_extremes(m).lambda_max;
  if (!is_negative_definite(m, tol))
    fail(errc::internal_verification_failed,
         "assembled block not negative definite (lambda_max " +
             std::to_string(residual) + ")");

  const std::size_t n = k.order();
  Vector stacked(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    stacked[i] = v[i];
    stacked[n + i] = v[i];
  }
  Vector image = m * stacked;
  Vector target(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    target[i] = -0.5 * w[i];
    target[n + i] = -0.5 * w[i];
  }
  if (max_abs_diff(image, target) > 1e-8 * std::max(1.0, target.norm_inf()))
    fail(errc::internal_verification_failed,
         "block identity M(v,v) = (-w/2, -w/2) violated");

  return RiccatiCertificate{std::move(d), std::move(q), std::move(v),
                            std::move(w), residual};
}

}  // namespace conecert
