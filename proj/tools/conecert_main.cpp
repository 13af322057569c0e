// conecert command-line front end.
//
// Exit codes: 0 property holds / certificate found, 1 property fails /
// certified infeasible, 2 inconclusive, 3 input or verification error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "conecert/conecert.hpp"
#include "conecert/serialize.hpp"

namespace {

using namespace conecert;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void print_matrix(std::ostream& out, const std::string& name, const Matrix& m) {
  out << name << " =\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "  ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << num(m(i, j));
    }
    out << '\n';
  }
}

void print_vector(std::ostream& out, const std::string& name, const Vector& v) {
  out << name << " = (";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out << ", ";
    out << num(v[i]);
  }
  out << ")\n";
}

void emit(const json& j, const std::string& out_path, const std::string& format,
          bool quiet_stdout = false) {
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) fail(errc::invalid_argument, "cannot write " + out_path);
    out << j.dump(2) << '\n';
  }
  if (format == "json" && !quiet_stdout) std::cout << j.dump(2) << '\n';
}

int report_predicate(const char* what, const PredicateReport& r,
                     const std::string& format) {
  if (format == "json") {
    std::cout << predicate_report_to_json(r).dump(2) << '\n';
  } else {
    std::cout << what << ": " << (r.verdict ? "holds" : "fails") << '\n';
    if (std::isfinite(r.margin))
      std::cout << "worst pair value: " << num(r.margin) << '\n';
    for (const auto& v : r.violations)
      std::cout << "violation: generator pair (" << v.i << ", " << v.j
                << "), inner product " << num(v.value) << '\n';
  }
  return r.verdict ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conecert: stability and Riccati certificates for linear maps "
               "on self-dual cones"};
  app.require_subcommand(1);
  app.fallthrough();

  double tol = kDefaultTol;
  std::string format = "text";
  app.add_option("--tol", tol, "relative tolerance (default 1e-9)")
      ->check(CLI::PositiveNumber)
      ->envname("CONECERT_TOL");
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string a_path, b_path, d_path, e_path, cone_path, out_path, in_path;
  std::vector<std::string> pair_paths;
  std::size_t resolution = 60;
  std::size_t refine_iters = 40;
  double lmi_tol = 1e-7;

  auto* check_qm = app.add_subcommand("check-qm", "quasi-monotonicity of A on K");
  check_qm->add_option("-A", a_path)->required();
  check_qm->add_option("-K", cone_path)->required();

  auto* check_diff =
      app.add_subcommand("check-diffusive", "diffusivity of D on K");
  check_diff->add_option("-D", d_path)->required();
  check_diff->add_option("-K", cone_path)->required();

  auto* check_nonneg =
      app.add_subcommand("check-nonneg", "K-nonnegativity of B");
  check_nonneg->add_option("-B", b_path)->required();
  check_nonneg->add_option("-K", cone_path)->required();

  auto* stability = app.add_subcommand(
      "stability", "interior-witness stability test for a QM map");
  stability->add_option("-A", a_path)->required();
  stability->add_option("-K", cone_path)->required();

  auto* lyapunov =
      app.add_subcommand("lyapunov", "diffusive Lyapunov certificate");
  lyapunov->add_option("-A", a_path)->required();
  lyapunov->add_option("-K", cone_path)->required();
  lyapunov->add_option("-o,--out", out_path);

  auto* riccati =
      app.add_subcommand("riccati", "diffusive Riccati certificate");
  riccati->add_option("-A", a_path)->required();
  riccati->add_option("-B", b_path)->required();
  riccati->add_option("-K", cone_path)->required();
  riccati->add_option("-o,--out", out_path);

  auto* dstab = app.add_subcommand("d-stability",
                                   "stability of EA for diffusive invertible E");
  dstab->add_option("-A", a_path)->required();
  dstab->add_option("-E", e_path)->required();
  dstab->add_option("-K", cone_path)->required();

  auto* common = app.add_subcommand(
      "common-riccati",
      "certified feasibility of a common diagonal (D,Q) Riccati pair");
  common->add_option("--pairs", pair_paths,
                     "matrix files a1 b1 [a2 b2 ...]")
      ->required()
      ->expected(-2);
  common->add_option("--resolution", resolution)->check(CLI::PositiveNumber);
  common->add_option("--refine-iters", refine_iters);
  common->add_option("--lmi-tol", lmi_tol)->check(CLI::PositiveNumber);
  common->add_option("-o,--out", out_path);

  auto* repro = app.add_subcommand(
      "reproduce-counterexample",
      "replay the bundled two-system common-Riccati benchmark");
  repro->add_option("-o,--out", out_path);
  repro->add_option("--resolution", resolution)->check(CLI::PositiveNumber);
  repro->add_option("--refine-iters", refine_iters);

  auto* psd = app.add_subcommand("psd-demo",
                                 "quadratic representations are not diffusive "
                                 "on the psd cone");

  auto* verify = app.add_subcommand("verify",
                                    "re-verify a serialized certificate");
  verify->add_option("-i,--input", in_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (*check_qm)
      return report_predicate(
          "quasi-monotone",
          is_qm(read_matrix_file(a_path), read_cone_file(cone_path), tol),
          format);

    if (*check_diff)
      return report_predicate(
          "diffusive",
          is_diffusive(read_matrix_file(d_path), read_cone_file(cone_path), tol),
          format);

    if (*check_nonneg)
      return report_predicate(
          "K-nonnegative",
          is_k_nonnegative(read_matrix_file(b_path), read_cone_file(cone_path),
                           tol),
          format);

    if (*stability) {
      Matrix a = read_matrix_file(a_path);
      ConeModel k = read_cone_file(cone_path);
      auto w = stability_witness(a, k, tol);
      if (!w) {
        std::cout << "no interior witness: A is not stable\n";
        return 1;
      }
      if (format == "json") {
        json j{{"stable", true},
               {"v", vector_to_json(w->v)},
               {"margins_v", w->margins_v},
               {"margins_minus_av", w->margins_minus_av}};
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "stable: interior witness found\n";
        print_vector(std::cout, "v", w->v);
        print_vector(std::cout, "-Av", -(a * w->v));
      }
      return 0;
    }

    if (*lyapunov) {
      Matrix a = read_matrix_file(a_path);
      ConeModel k = read_cone_file(cone_path);
      LyapunovCertificate cert = lyapunov_diffusive(a, k, tol);
      json j = lyapunov_certificate_to_json(a, k, cert, tol);
      emit(j, out_path, "json", format != "json" && !out_path.empty());
      if (format == "text") {
        print_matrix(std::cout, "D", cert.d);
        std::cout << "residual lambda_max(A^T D + D A) = " << num(cert.residual)
                  << '\n';
      }
      return 0;
    }

    if (*riccati) {
      Matrix a = read_matrix_file(a_path);
      Matrix b = read_matrix_file(b_path);
      ConeModel k = read_cone_file(cone_path);
      RiccatiCertificate cert = riccati_diffusive(a, b, k, tol);
      json j = riccati_certificate_to_json(a, b, k, cert, tol);
      emit(j, out_path, "json", format != "json" && !out_path.empty());
      if (format == "text") {
        print_matrix(std::cout, "D", cert.d);
        print_matrix(std::cout, "Q", cert.q);
        std::cout << "residual lambda_max(block) = " << num(cert.residual)
                  << '\n';
      }
      return 0;
    }

    if (*dstab) {
      bool ok = d_stability(read_matrix_file(a_path), read_matrix_file(e_path),
                            read_cone_file(cone_path), tol);
      std::cout << "EA " << (ok ? "stable" : "not stable") << '\n';
      return ok ? 0 : 1;
    }

    if (*common) {
      if (pair_paths.size() % 2 != 0)
        fail(errc::invalid_argument,
             "--pairs needs matrix files in (A, B) pairs");
      std::vector<SystemPair> pairs;
      for (std::size_t i = 0; i < pair_paths.size(); i += 2)
        pairs.push_back(make_system_pair(read_matrix_file(pair_paths[i]),
                                         read_matrix_file(pair_paths[i + 1]),
                                         tol));
      FeasibilityVerdict v =
          minimize_convex_simplex(pairs, resolution, refine_iters, lmi_tol);
      emit(feasibility_verdict_to_json(v, true), out_path, format);
      if (format == "text") {
        std::cout << "verdict: " << feasibility_name(v.status) << '\n';
        std::cout << "best value " << num(v.best_value) << ", certified bound "
                  << num(v.bound) << " (mesh " << num(v.mesh) << ", Lipschitz "
                  << num(v.lipschitz) << ")\n";
        if (v.status == Feasibility::feasible) {
          print_matrix(std::cout, "D", verdict_d(v));
          print_matrix(std::cout, "Q", verdict_q(v));
        }
      }
      switch (v.status) {
        case Feasibility::feasible: return 0;
        case Feasibility::infeasible_certified: return 1;
        case Feasibility::inconclusive: return 2;
      }
    }

    if (*repro) {
      CounterexampleReport rep =
          reproduce_counterexample(resolution, refine_iters, lmi_tol);
      emit(counterexample_report_to_json(rep), out_path, format);
      if (format == "text") {
        for (const auto& c : rep.checks)
          std::cout << (c.pass ? "[ ok ] " : "[FAIL] ") << c.name
                    << " (margin " << num(c.margin) << ")\n";
        std::cout << "joint verdict: " << feasibility_name(rep.joint.status)
                  << '\n';
        if (rep.joint.status == Feasibility::feasible) {
          print_matrix(std::cout, "D", verdict_d(rep.joint));
          print_matrix(std::cout, "Q", verdict_q(rep.joint));
          std::cout << "block residual " << num(rep.joint.best_value) << '\n';
        }
        std::cout << (rep.reproduced ? "all checks hold\n"
                                     : "reproduction deviates from the "
                                       "published claims (see checks)\n");
      }
      return rep.reproduced ? 0 : 1;
    }

    if (*psd) {
      PsdDemoReport rep = non_diffusivity_demo();
      if (format == "json") {
        json j{{"xy_inner", rep.xy_inner},
               {"x_aya_inner", rep.x_aya_inner},
               {"X", matrix_to_json(rep.x.to_full())},
               {"Y", matrix_to_json(rep.y.to_full())},
               {"A", matrix_to_json(rep.a.to_full())},
               {"AYA", matrix_to_json(rep.aya.to_full())}};
        std::cout << j.dump(2) << '\n';
      } else {
        print_matrix(std::cout, "X", rep.x.to_full());
        print_matrix(std::cout, "Y", rep.y.to_full());
        print_matrix(std::cout, "A", rep.a.to_full());
        print_matrix(std::cout, "AYA", rep.aya.to_full());
        std::cout << "<X, Y> = " << num(rep.xy_inner) << '\n';
        std::cout << "<X, AYA> = " << num(rep.x_aya_inner) << '\n';
        std::cout << "X and Y are orthogonal in the psd cone, yet the "
                     "quadratic representation of A does not preserve that "
                     "orthogonality: it is not diffusive.\n";
      }
      bool ok = rep.xy_inner == 0.0 && std::abs(rep.x_aya_inner - 1.0) <= 1e-12;
      return ok ? 0 : 1;
    }

    if (*verify) {
      std::ifstream in(in_path);
      if (!in) fail(errc::invalid_argument, "cannot open " + in_path);
      json j = json::parse(in);
      VerifyResult res = verify_certificate_json(j);
      if (res.ok) {
        std::cout << "certificate verifies\n";
        return 0;
      }
      for (const auto& f : res.failures) std::cout << "mismatch: " << f << '\n';
      return 1;
    }
  } catch (const parse_error& e) {
    std::cerr << e.what() << '\n';
    return 3;
  } catch (const error& e) {
    std::cerr << e.what() << '\n';
    return 3;
  } catch (const json::exception& e) {
    std::cerr << "json error: " << e.what() << '\n';
    return 3;
  }
  return 3;
}
