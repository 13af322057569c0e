#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "conecert/certificates.hpp"
#include "conecert/cone.hpp"
#include "conecert/counterexample.hpp"
#include "conecert/eig.hpp"
#include "conecert/errors.hpp"
#include "conecert/lmi.hpp"
#include "conecert/matrix.hpp"
#include "conecert/qm.hpp"

namespace conecert {

using json = nlohmann::json;

inline json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", rows}};
}

inline Matrix matrix_from_json(const json& j) {
  std::size_t rows = j.at("rows").get<std::size_t>();
  std::size_t cols = j.at("cols").get<std::size_t>();
  const json& data = j.at("data");
  if (data.size() != rows) fail(errc::invalid_argument, "bad matrix json");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (data[i].size() != cols) fail(errc::invalid_argument, "bad matrix json");
    for (std::size_t jx = 0; jx < cols; ++jx)
      m(i, jx) = data[i][jx].get<double>();
  }
  return m;
}

inline json vector_to_json(const Vector& v) {
  json a = json::array();
  for (double x : v) a.push_back(x);
  return a;
}

inline Vector vector_from_json(const json& j) {
  std::vector<double> v;
  for (const auto& x : j) v.push_back(x.get<double>());
  return Vector(std::move(v));
}

inline json cone_to_json(const ConeModel& k) {
  json j{{"kind", cone_kind_name(k.kind())}, {"n", k.order()}};
  if (k.kind() == ConeModel::Kind::rotated_orthant ||
      k.kind() == ConeModel::Kind::simplicial)
    j["generators"] = matrix_to_json(k.generator_matrix());
  return j;
}

inline ConeModel cone_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  std::size_t n = j.at("n").get<std::size_t>();
  if (kind == "orthant") return ConeModel::orthant(n);
  if (kind == "rotated")
    return ConeModel::rotated_orthant(matrix_from_json(j.at("generators")));
  if (kind == "simplicial")
    return ConeModel::simplicial(matrix_from_json(j.at("generators")));
  if (kind == "psd") return ConeModel::psd(n);
  fail(errc::invalid_argument, "unknown cone kind in json: " + kind);
}

inline json predicate_report_to_json(const PredicateReport& r) {
  json viol = json::array();
  for (const auto& v : r.violations)
    viol.push_back(json{{"i", v.i}, {"j", v.j}, {"value", v.value}});
  json margin;
  if (std::isfinite(r.margin))
    margin = r.margin;
  else
    margin = "none";  // no generator pair was subject to a check
  return json{{"verdict", r.verdict}, {"violations", viol}, {"margin", margin}};
}

/// Certificate report: inputs, cone, certificate body, and every margin a
/// verifier needs to recompute the result from the serialized data alone.
inline json lyapunov_certificate_to_json(const Matrix& a, const ConeModel& k,
                                         const LyapunovCertificate& cert,
                                         double tol) {
  Matrix s = a.transpose() * cert.d + cert.d * a;
  return json{
      {"type", "lyapunov-diffusive"},
      {"tolerance", tol},
      {"inputs", json{{"A", matrix_to_json(a)}, {"cone", cone_to_json(k)}}},
      {"certificate",
       json{{"D", matrix_to_json(cert.d)},
            {"v", vector_to_json(cert.v)},
            {"w", vector_to_json(cert.w)},
            {"residual", cert.residual}}},
      {"margins",
       json{{"d_symmetry_defect", symmetry_defect(cert.d)},
            {"d_lambda_min", sym_eig_extremes(cert.d).lambda_min},
            {"d_diffusive", predicate_report_to_json(is_diffusive(cert.d, k, tol))},
            {"residual_lambda_max", sym_eig_extremes(s).lambda_max}}}};
}

inline json riccati_certificate_to_json(const Matrix& a, const Matrix& b,
                                        const ConeModel& k,
                                        const RiccatiCertificate& cert,
                                        double tol) {
  Matrix m = assemble_block(a, b, cert.d, cert.q);
  const std::size_t n = k.order();
  Vector stacked(2 * n), target(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    stacked[i] = cert.v[i];
    stacked[n + i] = cert.v[i];
    target[i] = -0.5 * cert.w[i];
    target[n + i] = -0.5 * cert.w[i];
  }
  double identity_error = max_abs_diff(m * stacked, target);
  return json{
      {"type", "riccati-diffusive"},
      {"tolerance", tol},
      {"inputs", json{{"A", matrix_to_json(a)},
                      {"B", matrix_to_json(b)},
                      {"cone", cone_to_json(k)}}},
      {"certificate",
       json{{"D", matrix_to_json(cert.d)},
            {"Q", matrix_to_json(cert.q)},
            {"v", vector_to_json(cert.v)},
            {"w", vector_to_json(cert.w)},
            {"residual", cert.residual}}},
      {"margins",
       json{{"d_diffusive", predicate_report_to_json(is_diffusive(cert.d, k, tol))},
            {"q_diffusive", predicate_report_to_json(is_diffusive(cert.q, k, tol))},
            {"block_lambda_max", sym_eig_extremes(m).lambda_max},
            {"block_identity_error", identity_error}}}};
}

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Recompute every stored residual and margin from the serialized matrices
/// and compare against the stored values at 1e-9 relative.
inline VerifyResult verify_certificate_json(const json& j,
                                            double check_tol = 1e-9) {
  VerifyResult res;
  auto expect = [&](const std::string& name, double stored, double recomputed) {
    double scale = std::max({1.0, std::abs(stored), std::abs(recomputed)});
    if (std::abs(stored - recomputed) > check_tol * scale) {
      res.ok = false;
      res.failures.push_back(name + ": stored " + std::to_string(stored) +
                             " vs recomputed " + std::to_string(recomputed));
    }
  };
  auto expect_true = [&](const std::string& name, bool value) {
    if (!value) {
      res.ok = false;
      res.failures.push_back(name + " does not hold");
    }
  };

  std::string type = j.at("type").get<std::string>();
  double tol = j.at("tolerance").get<double>();
  ConeModel k = cone_from_json(j.at("inputs").at("cone"));
  Matrix a = matrix_from_json(j.at("inputs").at("A"));
  const json& cert = j.at("certificate");
  Matrix d = matrix_from_json(cert.at("D"));

  try {
  if (type == "lyapunov-diffusive") {
    Matrix s = a.transpose() * d + d * a;
    expect("residual", cert.at("residual").get<double>(),
           sym_eig_extremes(s).lambda_max);
    expect("margins.residual_lambda_max",
           j.at("margins").at("residual_lambda_max").get<double>(),
           sym_eig_extremes(s).lambda_max);
    expect("margins.d_lambda_min",
           j.at("margins").at("d_lambda_min").get<double>(),
           sym_eig_extremes(d).lambda_min);
    expect_true("residual negative", cert.at("residual").get<double>() < 0.0);
    expect_true("D diffusive", is_diffusive(d, k, tol).verdict);
    expect_true("D positive definite", is_positive_definite(d, tol));
  } else if (type == "riccati-diffusive") {
    Matrix b = matrix_from_json(j.at("inputs").at("B"));
    Matrix q = matrix_from_json(cert.at("Q"));
    Matrix m = assemble_block(a, b, d, q);
    expect("residual", cert.at("residual").get<double>(),
           sym_eig_extremes(m).lambda_max);
    expect("margins.block_lambda_max",
           j.at("margins").at("block_lambda_max").get<double>(),
           sym_eig_extremes(m).lambda_max);
    Vector v = vector_from_json(cert.at("v"));
    Vector w = vector_from_json(cert.at("w"));
    const std::size_t n = k.order();
    Vector stacked(2 * n), target(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      stacked[i] = v[i];
      stacked[n + i] = v[i];
      target[i] = -0.5 * w[i];
      target[n + i] = -0.5 * w[i];
    }
    expect("margins.block_identity_error",
           j.at("margins").at("block_identity_error").get<double>(),
           max_abs_diff(m * stacked, target));
    expect_true("residual negative", cert.at("residual").get<double>() < 0.0);
    expect_true("D diffusive", is_diffusive(d, k, tol).verdict);
    expect_true("Q diffusive", is_diffusive(q, k, tol).verdict);
  } else {
    fail(errc::invalid_argument, "unknown certificate type: " + type);
  }
  } catch (const error& e) {
    if (e.code() == errc::invalid_argument) throw;
    res.ok = false;
    res.failures.push_back(std::string("recomputation failed: ") + e.what());
  }
  return res;
}

inline json feasibility_verdict_to_json(const FeasibilityVerdict& v,
                                        bool riccati_layout) {
  json j{{"verdict", feasibility_name(v.status)},
         {"theta", vector_to_json(v.theta)},
         {"best_value", v.best_value},
         {"grid_min", v.grid_min},
         {"bound", v.bound},
         {"mesh", v.mesh},
         {"lipschitz", v.lipschitz},
         {"resolution", v.resolution}};
  if (v.status == Feasibility::feasible) {
    if (riccati_layout) {
      j["D"] = matrix_to_json(verdict_d(v));
      j["Q"] = matrix_to_json(verdict_q(v));
    } else {
      j["E"] = matrix_to_json(verdict_e(v));
    }
    j["residual"] = v.best_value;
  }
  return j;
}

inline json counterexample_report_to_json(const CounterexampleReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back(
        json{{"name", c.name}, {"verdict", c.pass}, {"margin", c.margin}});
  return json{
      {"inputs", json{{"A1", matrix_to_json(rep.data.a1)},
                      {"B1", matrix_to_json(rep.data.b1)},
                      {"A2", matrix_to_json(rep.data.a2)},
                      {"B2", matrix_to_json(rep.data.b2)},
                      {"E", matrix_to_json(rep.data.e)}}},
      {"checks", checks},
      {"verdict", feasibility_name(rep.joint.status)},
      {"bound", rep.joint.bound},
      {"mesh", rep.joint.mesh},
      {"lipschitz", rep.joint.lipschitz},
      {"joint", feasibility_verdict_to_json(rep.joint, true)},
      {"reproduced", rep.reproduced}};
}

}  // namespace conecert
