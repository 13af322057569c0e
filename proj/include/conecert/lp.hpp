#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "conecert/errors.hpp"
#include "conecert/matrix.hpp"

namespace conecert {

/// Linear feasibility problem over free z: every row demands <a, z> >= b.
struct LpProblem {
  struct Row {
    Vector coeffs;
    double rhs = 0.0;
  };

  std::size_t dim = 0;
  std::vector<Row> rows;

  explicit LpProblem(std::size_t dimension = 0) : dim(dimension) {}

  void add_row(Vector coeffs, double rhs) {
    if (coeffs.dim() != dim)
      fail(errc::dimension_mismatch, "LP row dimension mismatch");
    rows.push_back(Row{std::move(coeffs), rhs});
  }
};

struct LpResult {
  bool feasible = false;
  Vector witness;                  // valid when feasible
  double phase_one_objective = 0;  // residual infeasibility measure
};

/// Dense phase-I simplex with Bland's rule (deterministic, cycle-free).
///
/// Free z is split as z = p - q with p, q >= 0; each inequality gets a
/// surplus variable and an artificial column. Feasibility is decided by the
/// phase-I optimum (the total artificial mass): only a value strictly above
/// tolerance is reported Infeasible. Every Feasible return re-checks all rows
/// with slack >= -1e-9 * scale and refuses to return a violating witness.
inline LpResult lp_solve(const LpProblem& p, double tol = kDefaultTol) {
  const std::size_t d = p.dim;
  const std::size_t m = p.rows.size();
  for (const auto& row : p.rows)
    if (row.coeffs.dim() != d)
      fail(errc::dimension_mismatch, "LP row dimension mismatch");

  if (m == 0) return LpResult{true, Vector(d), 0.0};

  // Columns: p (d) | q (d) | surplus (m) | artificial (m).
  const std::size_t ncols = 2 * d + 2 * m;
  std::vector<std::vector<double>> t(m, std::vector<double>(ncols + 1, 0.0));
  std::vector<std::size_t> basis(m);
  double rhs_scale = 1.0;

  for (std::size_t i = 0; i < m; ++i) {
    double sgn = p.rows[i].rhs < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < d; ++j) {
      double a = sgn * p.rows[i].coeffs[j];
      t[i][j] = a;
      t[i][d + j] = -a;
    }
    t[i][2 * d + i] = -sgn;          // surplus: <a,z> - s = b
    t[i][2 * d + m + i] = 1.0;       // artificial
    t[i][ncols] = sgn * p.rows[i].rhs;
    basis[i] = 2 * d + m + i;
    rhs_scale = std::max(rhs_scale, std::abs(p.rows[i].rhs));
  }

  double entry_scale = 1.0;
  for (const auto& row : t)
    for (double v : row) entry_scale = std::max(entry_scale, std::abs(v));
  const double eps = 1e-12 * entry_scale;

  auto cost = [&](std::size_t j) { return j >= 2 * d + m ? 1.0 : 0.0; };

  const std::size_t iter_cap = 50000;  // Bland terminates; cap is a backstop
  for (std::size_t iter = 0;; ++iter) {
    if (iter > iter_cap)
      fail(errc::did_not_converge, "simplex iteration cap exceeded");

    // Reduced costs from scratch: c_j - sum_i c_{B(i)} t[i][j]. Sizes here
    // are tiny, so no incremental bookkeeping.
    std::size_t enter = ncols;
    for (std::size_t j = 0; j < ncols; ++j) {
      double cbar = cost(j);
      for (std::size_t i = 0; i < m; ++i)
        if (cost(basis[i]) != 0.0) cbar -= t[i][j];
      if (cbar < -eps) {
        enter = j;  // Bland: smallest improving index
        break;
      }
    }
    if (enter == ncols) break;

    std::size_t leave = m;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] > eps) {
        double ratio = t[i][ncols] / t[i][enter];
        if (ratio < best_ratio - 1e-15 ||
            (std::abs(ratio - best_ratio) <= 1e-15 &&
             (leave == m || basis[i] < basis[leave]))) {
          best_ratio = ratio;
          leave = i;
        }
      }
    }
    if (leave == m)
      fail(errc::did_not_converge, "phase-I column unbounded");  // cannot happen

    double piv = t[leave][enter];
    for (double& v : t[leave]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave) continue;
      double f = t[i][enter];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= ncols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  double objective = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    if (cost(basis[i]) != 0.0) objective += t[i][ncols];

  LpResult res;
  res.phase_one_objective = objective;
  if (objective > tol * rhs_scale) {
    res.feasible = false;
    return res;
  }

  Vector z(d);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < d)
      z[basis[i]] += t[i][ncols];
    else if (basis[i] < 2 * d)
      z[basis[i] - d] -= t[i][ncols];
  }

  for (std::size_t i = 0; i < m; ++i) {
    double val = p.rows[i].coeffs.dot(z);
    double scale = std::max({1.0, std::abs(p.rows[i].rhs), std::abs(val)});
    if (val - p.rows[i].rhs < -tol * scale)
      fail(errc::internal_verification_failed,
           "simplex produced a witness violating row " + std::to_string(i));
  }
  res.feasible = true;
  res.witness = std::move(z);
  return res;
}

}  // namespace conecert
