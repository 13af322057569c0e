#include <gtest/gtest.h>

#include "conecert/serialize.hpp"
#include "test_util.hpp"

using namespace conecert;

TEST(Serialize, MatrixRoundTripIsBitExact) {
  testutil::Rng rng(149);
  Matrix m = testutil::random_matrix(rng, 4, -10.0, 10.0);
  json j = matrix_to_json(m);
  json reparsed = json::parse(j.dump());
  Matrix back = matrix_from_json(reparsed);
  EXPECT_EQ(max_abs_diff(m, back), 0.0);
}

TEST(Serialize, ConeRoundTrip) {
  testutil::Rng rng(151);
  auto k = ConeModel::rotated_orthant(testutil::random_orthogonal(rng, 3));
  auto back = cone_from_json(json::parse(cone_to_json(k).dump()));
  EXPECT_EQ(back.kind(), k.kind());
  EXPECT_EQ(max_abs_diff(back.generator_matrix(), k.generator_matrix()), 0.0);

  auto orthant = cone_from_json(cone_to_json(ConeModel::orthant(2)));
  EXPECT_EQ(orthant.kind(), ConeModel::Kind::orthant);
}

TEST(Serialize, LyapunovCertificateVerifiesAfterRoundTrip) {
  auto k = ConeModel::orthant(3);
  testutil::Rng rng(157);
  Matrix a = testutil::random_stable_metzler(rng, 3);
  auto cert = lyapunov_diffusive(a, k);
  json j = lyapunov_certificate_to_json(a, k, cert, kDefaultTol);
  json reparsed = json::parse(j.dump(2));
  auto res = verify_certificate_json(reparsed);
  EXPECT_TRUE(res.ok) << (res.failures.empty() ? "" : res.failures.front());
}

TEST(Serialize, RiccatiCertificateVerifiesAfterRoundTrip) {
  auto k = ConeModel::orthant(2);
  Matrix a{{-3.0, 1.0}, {1.0, -3.0}};
  Matrix b = 0.5 * Matrix::identity(2);
  auto cert = riccati_diffusive(a, b, k);
  json j = riccati_certificate_to_json(a, b, k, cert, kDefaultTol);
  auto res = verify_certificate_json(json::parse(j.dump(2)));
  EXPECT_TRUE(res.ok) << (res.failures.empty() ? "" : res.failures.front());
}

TEST(Serialize, TamperedCertificateFailsVerification) {
  auto k = ConeModel::orthant(2);
  Matrix a{{-2.0, 1.0}, {1.0, -2.0}};
  auto cert = lyapunov_diffusive(a, k);
  json j = lyapunov_certificate_to_json(a, k, cert, kDefaultTol);
  j["certificate"]["residual"] = -0.123456;
  EXPECT_FALSE(verify_certificate_json(j).ok);

  json j2 = lyapunov_certificate_to_json(a, k, cert, kDefaultTol);
  j2["certificate"]["D"]["data"][0][1] = 0.5;  // off-diagonal breaks diffusivity
  EXPECT_FALSE(verify_certificate_json(j2).ok);
}

TEST(Serialize, CounterexampleReportSchema) {
  auto rep = reproduce_counterexample(20, 10);
  json j = counterexample_report_to_json(rep);
  EXPECT_TRUE(j.contains("inputs"));
  EXPECT_TRUE(j.contains("checks"));
  EXPECT_TRUE(j.contains("verdict"));
  EXPECT_TRUE(j.contains("bound"));
  EXPECT_TRUE(j.contains("mesh"));
  EXPECT_TRUE(j.contains("lipschitz"));
  for (const auto& c : j["checks"]) {
    EXPECT_TRUE(c.contains("name"));
    EXPECT_TRUE(c.contains("verdict"));
    EXPECT_TRUE(c.contains("margin"));
  }
}
