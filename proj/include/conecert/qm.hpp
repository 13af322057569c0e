#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conecert/cone.hpp"
#include "conecert/errors.hpp"
#include "conecert/lp.hpp"
#include "conecert/lyapunov.hpp"
#include "conecert/matrix.hpp"
#include "conecert/solve.hpp"

namespace conecert {

/// Result of a cone predicate over generator pairs.
///
/// The finite generator checks are exact for simplicial self-dual cones:
/// any orthogonal pair x, y in K decomposes over the unit generators with
/// nonnegative coordinates, and since the generator Gram matrix is
/// nonnegative (enforced at cone construction), <x, y> = 0 forces every
/// cross term with positive weight onto an orthogonal generator pair. The
/// predicate over generator pairs is therefore equivalent to the predicate
/// over all of K x K. margin is the worst raw inner product encountered
/// (+inf when no pair was subject to a check); verdict false iff violations
/// is non-empty, judged at the relative tolerance.
struct PredicateReport {
  struct Violation {
    std::size_t i = 0;
    std::size_t j = 0;
    double value = 0.0;
  };

  bool verdict = true;
  std::vector<Violation> violations;
  double margin = std::numeric_limits<double>::infinity();
};

namespace detail {

inline void require_simplicial(const ConeModel& k, const char* op) {
  if (!k.is_simplicial())
    fail(errc::unsupported_cone, std::string(op) + " needs a simplicial cone");
}

inline void require_matching(const ConeModel& k, const Matrix& a) {
  if (!a.is_square() || a.rows() != k.ambient_dim())
    fail(errc::dimension_mismatch, "operator does not match cone dimension");
}

}  // namespace detail

/// Quasi-monotonicity of A with respect to K: for orthogonal x, y in K,
/// <x, A y> >= 0. Over the orthant this is exactly the Metzler test.
inline PredicateReport is_qm(const Matrix& a, const ConeModel& k,
                             double tol = kDefaultTol) {
  detail::require_simplicial(k, "is_qm");
  detail::require_matching(k, a);
  const Matrix& g = k.generator_matrix();
  const std::size_t n = k.order();
  const double scale = std::max(1.0, a.frobenius_norm());

  PredicateReport r;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (std::abs(g.column(i).dot(g.column(j))) > tol) continue;
      double value = g.column(i).dot(a * g.column(j));
      r.margin = std::min(r.margin, value);
      if (value < -tol * scale)
        r.violations.push_back({i, j, value});
    }
  }
  r.verdict = r.violations.empty();
  return r;
}

/// K-nonnegativity of B: B maps every generator (hence all of K) into K.
inline PredicateReport is_k_nonnegative(const Matrix& b, const ConeModel& k,
                                        double tol = kDefaultTol) {
  detail::require_simplicial(k, "is_k_nonnegative");
  detail::require_matching(k, b);
  const std::size_t n = k.order();

  PredicateReport r;
  for (std::size_t j = 0; j < n; ++j) {
    Vector image = b * k.generator_matrix().column(j);
    MembershipVerdict mv = membership(k, image, tol);
    for (std::size_t i = 0; i < n; ++i)
      r.margin = std::min(r.margin, mv.products[i]);
    if (mv.classification == Membership::outside) {
      std::size_t worst_i =
          std::min_element(mv.products.begin(), mv.products.end()) -
          mv.products.begin();
      r.violations.push_back({worst_i, j, mv.products[worst_i]});
    }
  }
  r.verdict = r.violations.empty();
  return r;
}

/// Diffusivity of D: D is K-nonnegative and annihilates the cross terms of
/// orthogonal generator pairs, |<x_i, D x_j>| <= tol * scale.
inline PredicateReport is_diffusive(const Matrix& d, const ConeModel& k,
                                    double tol = kDefaultTol) {
  detail::require_simplicial(k, "is_diffusive");
  detail::require_matching(k, d);
  const Matrix& g = k.generator_matrix();
  const std::size_t n = k.order();
  const double scale = std::max(1.0, d.frobenius_norm());

  PredicateReport r = is_k_nonnegative(d, k, tol);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (std::abs(g.column(i).dot(g.column(j))) > tol) continue;
      double value = g.column(i).dot(d * g.column(j));
      r.margin = std::min(r.margin, -std::abs(value));
      if (std::abs(value) > tol * scale)
        r.violations.push_back({i, j, value});
    }
  }
  r.verdict = r.violations.empty();
  return r;
}

inline Matrix adjoint(const Matrix& a) { return a.transpose(); }

/// Interior witness for the stability of a QM map: v in int(K) with
/// -Av in int(K). Strictness is encoded homogeneously as >= 1 rows.
struct StabilityWitness {
  Vector v;
  std::vector<double> margins_v;        // <x_i, v>
  std::vector<double> margins_minus_av; // <x_i, -Av>
};

inline std::optional<StabilityWitness> stability_witness(
    const Matrix& a, const ConeModel& k, double tol = kDefaultTol) {
  PredicateReport qm = is_qm(a, k, tol);
  if (!qm.verdict)
    fail(errc::not_quasi_monotone,
         "stability_witness requires a quasi-monotone map (worst pair value " +
             std::to_string(qm.margin) + ")");

  const Matrix& g = k.generator_matrix();
  const std::size_t n = k.order();
  const Matrix minus_at = -a.transpose();

  LpProblem lp(n);
  for (std::size_t i = 0; i < n; ++i) lp.add_row(g.column(i), 1.0);
  for (std::size_t i = 0; i < n; ++i)
    lp.add_row(minus_at * g.column(i), 1.0);  // <x_i, -Av> = <-A^T x_i, v>

  LpResult res = lp_solve(lp, tol);
  if (!res.feasible) return std::nullopt;

  StabilityWitness w;
  w.v = res.witness;
  Vector minus_av = -(a * w.v);
  for (std::size_t i = 0; i < n; ++i) {
    w.margins_v.push_back(g.column(i).dot(w.v));
    w.margins_minus_av.push_back(g.column(i).dot(minus_av));
  }
  return w;
}

/// D-stability check: with A stable and QM and E an invertible diffusive
/// map, EA is again QM and stable. All preconditions are verified here so
/// the operation doubles as a test harness for that statement.
inline bool d_stability(const Matrix& a, const Matrix& e, const ConeModel& k,
                        double tol = kDefaultTol) {
  if (!is_qm(a, k, tol).verdict)
    fail(errc::not_quasi_monotone, "A is not quasi-monotone on K");
  if (!is_stable(a, tol)) fail(errc::not_stable, "A is not stable");
  if (!is_diffusive(e, k, tol).verdict)
    fail(errc::not_diffusive, "E does not act diffusively on K");
  if (std::abs(determinant(e)) <= tol)
    fail(errc::singular_scaling, "E is singular");
  return is_stable(e * a, tol);
}

}  // namespace conecert
