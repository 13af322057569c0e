#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "conecert/certificates.hpp"
#include "conecert/cone.hpp"
#include "conecert/eig.hpp"
#include "conecert/errors.hpp"
#include "conecert/matrix.hpp"
#include "conecert/qm.hpp"

namespace conecert {

/// One delayed system, A Metzler and B entrywise nonnegative (both are
/// validated against the orthant when constructed through make_system_pair).
struct SystemPair {
  Matrix A;
  Matrix B;
};

inline SystemPair make_system_pair(Matrix a, Matrix b,
                                   double tol = kDefaultTol) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    fail(errc::dimension_mismatch, "system pair needs two n x n matrices");
  ConeModel orthant = ConeModel::orthant(a.rows());
  if (!is_qm(a, orthant, tol).verdict)
    fail(errc::not_quasi_monotone, "A is not Metzler");
  if (!is_k_nonnegative(b, orthant, tol).verdict)
    fail(errc::not_k_nonnegative, "B has negative entries");
  return SystemPair{std::move(a), std::move(b)};
}

enum class Feasibility { feasible, infeasible_certified, inconclusive };

inline const char* feasibility_name(Feasibility f) {
  switch (f) {
    case Feasibility::feasible: return "feasible";
    case Feasibility::infeasible_certified: return "infeasible-certified";
    case Feasibility::inconclusive: return "inconclusive";
  }
  return "unknown";
}

/// Outcome of minimizing f(theta) = max_i lambda_max(sum_k theta_k N_ik)
/// over the probability simplex.
///
/// Feasible: best_value < -tol with all weights above tol; the minimizing
/// weights are returned. InfeasibleCertified: grid_min - lipschitz * mesh
/// exceeds +tol, a rigorous lower bound on f over the whole simplex (mesh is
/// the l-inf covering radius 1/resolution and lipschitz the l-inf Lipschitz
/// constant max_i sum_k ||N_ik||_2). Inconclusive: neither side resolved;
/// raise the resolution.
struct FeasibilityVerdict {
  Feasibility status = Feasibility::inconclusive;
  Vector theta;             // best point found (after local refinement)
  double best_value = 0.0;  // f(theta)
  double grid_min = 0.0;    // min of f over the grid proper
  double bound = 0.0;       // grid_min - lipschitz * mesh
  double mesh = 0.0;
  double lipschitz = 0.0;
  std::size_t resolution = 0;
};

namespace detail {

/// Coefficient matrices of an affine symmetric-matrix family per branch i:
/// theta maps to sum_k theta_k coeff[i][k].
struct AffineFamily {
  std::size_t weights = 0;
  std::vector<std::vector<Matrix>> coeff;
};

inline double family_value(const AffineFamily& fam, const Vector& theta) {
  if (theta.dim() != fam.weights)
    fail(errc::dimension_mismatch, "weight vector has wrong dimension");
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& branch : fam.coeff) {
    Matrix m(branch[0].rows(), branch[0].cols());
    for (std::size_t k = 0; k < fam.weights; ++k) {
      if (theta[k] != 0.0) m += theta[k] * branch[k];
    }
    worst = std::max(worst, sym_eig_extremes(m).lambda_max);
  }
  return worst;
}

inline double family_lipschitz(const AffineFamily& fam) {
  double worst = 0.0;
  for (const auto& branch : fam.coeff) {
    double sum = 0.0;
    for (const auto& n : branch) sum += spectral_norm_sym(n);
    worst = std::max(worst, sum);
  }
  return worst;
}

/// Deterministic exhaustive walk of {k/R : k in Z^m_{>=0}, sum k = R} in
/// lexicographic order, keeping the first minimizer.
template <typename Fn>
void for_each_composition(std::size_t total, std::size_t parts, Fn&& fn) {
  std::vector<std::size_t> k(parts, 0);
  std::function<void(std::size_t, std::size_t)> rec =
      [&](std::size_t pos, std::size_t left) {
        if (pos + 1 == parts) {
          k[pos] = left;
          fn(k);
          return;
        }
        for (std::size_t v = 0; v <= left; ++v) {
          k[pos] = v;
          rec(pos + 1, left - v);
        }
      };
  rec(0, total);
}

/// Local simplex-respecting descent: repeatedly probe mass transfers
/// theta_k -> theta_l at a shrinking step, keeping the best improvement.
inline void refine_on_simplex(const AffineFamily& fam, Vector& theta,
                              double& value, double step,
                              std::size_t refine_iters) {
  const std::size_t m = fam.weights;
  for (std::size_t it = 0; it < refine_iters && step > 1e-9; ++it) {
    double best_value = value;
    std::size_t best_k = m, best_l = m;
    for (std::size_t k = 0; k < m; ++k) {
      if (theta[k] < step) continue;
      for (std::size_t l = 0; l < m; ++l) {
        if (l == k) continue;
        Vector cand = theta;
        cand[k] -= step;
        cand[l] += step;
        double v = family_value(fam, cand);
        if (v < best_value) {
          best_value = v;
          best_k = k;
          best_l = l;
        }
      }
    }
    if (best_k == m) {
      step *= 0.5;
      continue;
    }
    theta[best_k] -= step;
    theta[best_l] += step;
    value = best_value;
  }
}

inline FeasibilityVerdict minimize_family_on_simplex(const AffineFamily& fam,
                                                     std::size_t resolution,
                                                     std::size_t refine_iters,
                                                     double tol) {
  if (resolution == 0)
    fail(errc::invalid_argument, "grid resolution must be positive");
  const std::size_t m = fam.weights;

  FeasibilityVerdict out;
  out.resolution = resolution;
  out.mesh = 1.0 / static_cast<double>(resolution);
  out.lipschitz = family_lipschitz(fam);

  double grid_min = std::numeric_limits<double>::infinity();
  Vector argmin(m);
  for_each_composition(resolution, m, [&](const std::vector<std::size_t>& k) {
    Vector theta(m);
    for (std::size_t i = 0; i < m; ++i)
      theta[i] = static_cast<double>(k[i]) / static_cast<double>(resolution);
    double v = family_value(fam, theta);
    if (v < grid_min) {
      grid_min = v;
      argmin = theta;
    }
  });
  out.grid_min = grid_min;
  out.bound = grid_min - out.lipschitz * out.mesh;

  out.theta = argmin;
  out.best_value = grid_min;
  refine_on_simplex(fam, out.theta, out.best_value, out.mesh, refine_iters);

  bool strictly_positive = out.theta.min_entry() > tol;
  if (out.best_value < -tol && strictly_positive)
    out.status = Feasibility::feasible;
  else if (out.bound > tol)
    out.status = Feasibility::infeasible_certified;
  else
    out.status = Feasibility::inconclusive;
  return out;
}

}  // namespace detail

namespace detail {

inline AffineFamily riccati_family(const std::vector<SystemPair>& pairs) {
  if (pairs.empty()) fail(errc::invalid_argument, "no system pairs given");
  const std::size_t n = pairs.front().A.rows();
  for (const auto& p : pairs)
    if (!p.A.is_square() || !p.B.is_square() || p.A.rows() != n ||
        p.B.rows() != n)
      fail(errc::dimension_mismatch, "system pairs have mixed dimensions");

  AffineFamily fam;
  fam.weights = 2 * n;
  for (const auto& p : pairs) {
    std::vector<Matrix> branch;
    for (std::size_t k = 0; k < 2 * n; ++k) {
      Vector d(n), q(n);
      if (k < n)
        d[k] = 1.0;
      else
        q[k - n] = 1.0;
      branch.push_back(
          assemble_block(p.A, p.B, Matrix::diagonal(d), Matrix::diagonal(q)));
    }
    fam.coeff.push_back(std::move(branch));
  }
  return fam;
}

}  // namespace detail

/// f(theta) = max_i lambda_max(M_i(theta)) where M_i is the assembled block
/// with D = diag(theta_1..n) and Q = diag(theta_n+1..2n). Convex in theta
/// (a max of maximal eigenvalues of affine symmetric families) and
/// positively homogeneous of degree one, which is what makes restricting
/// the search to the simplex lossless.
inline double objective(const std::vector<SystemPair>& pairs,
                        const Vector& theta) {
  return detail::family_value(detail::riccati_family(pairs), theta);
}

/// Decide feasibility of the common diagonal (D, Q) problem over the given
/// pairs by exhaustive simplex-grid evaluation plus local refinement.
/// Hard-capped at 2n <= 8: the grid certificate is exponential in the
/// simplex dimension and the operation targets desk-scale instances.
inline FeasibilityVerdict minimize_convex_simplex(
    const std::vector<SystemPair>& pairs, std::size_t resolution,
    std::size_t refine_iters = 40, double tol = 1e-7) {
  detail::AffineFamily fam = detail::riccati_family(pairs);
  if (fam.weights > 8)
    fail(errc::scale_too_large,
         "common Riccati search capped at 2n <= 8 weights");
  FeasibilityVerdict v =
      detail::minimize_family_on_simplex(fam, resolution, refine_iters, tol);

  if (v.status == Feasibility::feasible) {
    // Independent re-check of the winning point through the certificate
    // machinery rather than the cached objective value.
    const std::size_t n = pairs.front().A.rows();
    Vector d(n), q(n);
    for (std::size_t i = 0; i < n; ++i) {
      d[i] = v.theta[i];
      q[i] = v.theta[n + i];
    }
    for (const auto& p : pairs) {
      Matrix m =
          assemble_block(p.A, p.B, Matrix::diagonal(d), Matrix::diagonal(q));
      if (sym_eig_extremes(m).lambda_max > -tol)
        fail(errc::internal_verification_failed,
             "feasible verdict failed the independent eigenvalue re-check");
    }
  }
  return v;
}

/// Convenience accessors for a feasible common-Riccati verdict.
inline Matrix verdict_d(const FeasibilityVerdict& v) {
  const std::size_t n = v.theta.dim() / 2;
  Vector d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = v.theta[i];
  return Matrix::diagonal(d);
}

inline Matrix verdict_q(const FeasibilityVerdict& v) {
  const std::size_t n = v.theta.dim() / 2;
  Vector q(n);
  for (std::size_t i = 0; i < n; ++i) q[i] = v.theta[n + i];
  return Matrix::diagonal(q);
}

/// Common diagonal Lyapunov feasibility: minimize
/// g(e) = max_i lambda_max(A_i^T diag(e) + diag(e) A_i) over the e-simplex.
inline FeasibilityVerdict common_lyapunov_diag(
    const std::vector<Matrix>& a_list, std::size_t resolution,
    std::size_t refine_iters = 40, double tol = 1e-7) {
  if (a_list.empty()) fail(errc::invalid_argument, "no matrices given");
  const std::size_t n = a_list.front().rows();
  if (n > 4)
    fail(errc::scale_too_large, "common Lyapunov search capped at n <= 4");
  detail::AffineFamily fam;
  fam.weights = n;
  for (const auto& a : a_list) {
    if (!a.is_square() || a.rows() != n)
      fail(errc::dimension_mismatch, "matrices have mixed dimensions");
    std::vector<Matrix> branch;
    for (std::size_t k = 0; k < n; ++k) {
      Vector e(n);
      e[k] = 1.0;
      Matrix ek = Matrix::diagonal(e);
      branch.push_back(a.transpose() * ek + ek * a);
    }
    fam.coeff.push_back(std::move(branch));
  }
  return detail::minimize_family_on_simplex(fam, resolution, refine_iters, tol);
}

inline Matrix verdict_e(const FeasibilityVerdict& v) {
  return Matrix::diagonal(v.theta);
}

}  // namespace conecert
