#include <gtest/gtest.h>

#include "conecert/eig.hpp"
#include "conecert/matrix.hpp"
#include "test_util.hpp"

using namespace conecert;

TEST(SymEig, IdentityAndDiagonal) {
  auto ex = sym_eig_extremes(Matrix::identity(2));
  EXPECT_DOUBLE_EQ(ex.lambda_min, 1.0);
  EXPECT_DOUBLE_EQ(ex.lambda_max, 1.0);

  ex = sym_eig_extremes(Matrix{{-1.0, 0.0}, {0.0, -3.0}});
  EXPECT_DOUBLE_EQ(ex.lambda_min, -3.0);
  EXPECT_DOUBLE_EQ(ex.lambda_max, -1.0);
}

TEST(SymEig, OffDiagonalSwap) {
  // eigenvalues of [[0,1],[1,0]] are -1 and 1
  auto ex = sym_eig_extremes(Matrix{{0.0, 1.0}, {1.0, 0.0}});
  EXPECT_NEAR(ex.lambda_min, -1.0, 1e-12);
  EXPECT_NEAR(ex.lambda_max, 1.0, 1e-12);
}

TEST(SymEig, RejectsAsymmetric) {
  EXPECT_THROW(sym_eig_extremes(Matrix{{1.0, 2.0}, {0.0, 1.0}}), error);
  try {
    sym_eig_extremes(Matrix{{1.0, 2.0}, {0.0, 1.0}});
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_symmetric);
  }
}

TEST(SymEig, InvariantUnderOrthogonalConjugation) {
  testutil::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 2 + trial % 4;
    Matrix s = testutil::random_symmetric(rng, n, -3.0, 3.0);
    Matrix r = testutil::random_orthogonal(rng, n);
    Matrix conj = r.transpose() * s * r;
    auto a = sym_eig_extremes(s);
    auto b = sym_eig_extremes(symmetrize(conj));
    double scale = std::max(1.0, s.frobenius_norm());
    EXPECT_NEAR(a.lambda_min, b.lambda_min, 1e-8 * scale);
    EXPECT_NEAR(a.lambda_max, b.lambda_max, 1e-8 * scale);
  }
}

TEST(SymEig, TraceAndSumMatch) {
  testutil::Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 2 + trial % 5;
    Matrix s = testutil::random_symmetric(rng, n, -2.0, 2.0);
    auto ev = sym_eigenvalues(s);
    double sum = 0.0, trace = 0.0;
    for (double v : ev) sum += v;
    for (std::size_t i = 0; i < n; ++i) trace += s(i, i);
    EXPECT_NEAR(sum, trace, 1e-10 * std::max(1.0, std::abs(trace)));
  }
}

TEST(Definiteness, Examples) {
  EXPECT_TRUE(is_negative_definite(-Matrix::identity(2), 1e-9));
  EXPECT_FALSE(is_negative_definite(Matrix(2, 2), 1e-9));  // zero matrix
  EXPECT_FALSE(is_negative_definite(Matrix{{-1.0, 2.0}, {2.0, -1.0}}, 1e-9));
  EXPECT_TRUE(is_positive_definite(Matrix{{2.0, 1.0}, {1.0, 2.0}}, 1e-9));
  EXPECT_FALSE(is_positive_definite(Matrix(2, 2), 1e-9));
}
