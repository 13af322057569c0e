#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "conecert/errors.hpp"
#include "conecert/matrix.hpp"

namespace conecert {

struct EigExtremes {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
};

namespace detail {

/// Cyclic Jacobi on a symmetric matrix. Rotates until the off-diagonal
/// Frobenius norm falls below eps * ||S||_F, which delivers eigenvalues to
/// machine-level relative accuracy, well inside the 1e-10 contract.
inline std::vector<double> jacobi_eigenvalues(Matrix s) {
  const std::size_t n = s.rows();
  const double scale = s.frobenius_norm();
  if (n <= 1) return n == 1 ? std::vector<double>{s(0, 0)} : std::vector<double>{};
  if (scale == 0.0) return std::vector<double>(n, 0.0);

  const double stop = 1e-15 * scale;
  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += s(p, q) * s(p, q);
    off = std::sqrt(2.0 * off);
    if (off <= stop) {
      std::vector<double> ev(n);
      for (std::size_t i = 0; i < n; ++i) ev[i] = s(i, i);
      std::sort(ev.begin(), ev.end());
      return ev;
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double spq = s(p, q);
        if (std::abs(spq) <= 1e-300) continue;
        double tau = (s(q, q) - s(p, p)) / (2.0 * spq);
        double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double sn = t * c;
        double spp = s(p, p), sqq = s(q, q);
        s(p, p) = c * c * spp - 2.0 * sn * c * spq + sn * sn * sqq;
        s(q, q) = sn * sn * spp + 2.0 * sn * c * spq + c * c * sqq;
        s(p, q) = 0.0;
        s(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          double skp = s(k, p), skq = s(k, q);
          s(k, p) = c * skp - sn * skq;
          s(p, k) = s(k, p);
          s(k, q) = sn * skp + c * skq;
          s(q, k) = s(k, q);
        }
      }
    }
  }
  fail(errc::did_not_converge, "Jacobi eigenvalue iteration exceeded sweep cap");
}

}  // namespace detail

/// All eigenvalues of a symmetric matrix, ascending. S must be square and
/// symmetric to relative tolerance 1e-9 * ||S||_F.
inline std::vector<double> sym_eigenvalues(const Matrix& s) {
  if (!s.is_square()) fail(errc::dimension_mismatch, "matrix not square");
  double defect = symmetry_defect(s);
  if (defect > 1e-9 * std::max(1.0, s.frobenius_norm()))
    fail(errc::not_symmetric, "symmetry defect " + std::to_string(defect));
  return detail::jacobi_eigenvalues(symmetrize(s));
}

inline EigExtremes sym_eig_extremes(const Matrix& s) {
  auto ev = sym_eigenvalues(s);
  if (ev.empty()) fail(errc::dimension_mismatch, "empty matrix");
  return EigExtremes{ev.front(), ev.back()};
}

/// Spectral norm of a symmetric matrix.
inline double spectral_norm_sym(const Matrix& s) {
  auto ex = sym_eig_extremes(s);
  return std::max(std::abs(ex.lambda_min), std::abs(ex.lambda_max));
}

/// lambda_max(S) < -tol * max(1, ||S||_2).
inline bool is_negative_definite(const Matrix& s, double tol = kDefaultTol) {
  auto ex = sym_eig_extremes(s);
  double norm = std::max(std::abs(ex.lambda_min), std::abs(ex.lambda_max));
  return ex.lambda_max < -tol * std::max(1.0, norm);
}

/// lambda_min(S) > tol * max(1, ||S||_2).
inline bool is_positive_definite(const Matrix& s, double tol = kDefaultTol) {
  auto ex = sym_eig_extremes(s);
  double norm = std::max(std::abs(ex.lambda_min), std::abs(ex.lambda_max));
  return ex.lambda_min > tol * std::max(1.0, norm);
}

}  // namespace conecert
