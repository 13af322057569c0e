#include <gtest/gtest.h>

#include "conecert/eig.hpp"
#include "conecert/psd.hpp"
#include "test_util.hpp"

using namespace conecert;

namespace {

SymMatrix random_sym(testutil::Rng& rng, std::size_t n) {
  return SymMatrix::from_full(testutil::random_symmetric(rng, n, -1.0, 1.0));
}

SymMatrix random_psd(testutil::Rng& rng, std::size_t n) {
  Matrix g = testutil::random_matrix(rng, n, -1.0, 1.0);
  return SymMatrix::from_full(symmetrize(g.transpose() * g));
}

}  // namespace

TEST(TraceInner, Examples) {
  SymMatrix id{{1.0, 0.0}, {0.0, 1.0}};
  EXPECT_DOUBLE_EQ(trace_inner(id, id), 2.0);

  SymMatrix e11{{1.0, 0.0}, {0.0, 0.0}};
  SymMatrix e22{{0.0, 0.0}, {0.0, 1.0}};
  EXPECT_DOUBLE_EQ(trace_inner(e11, e22), 0.0);

  EXPECT_THROW(trace_inner(id, SymMatrix(3)), error);
}

TEST(TraceInner, PsdPairsAreNonnegative) {
  testutil::Rng rng(131);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + trial % 3;
    EXPECT_GE(trace_inner(random_psd(rng, n), random_psd(rng, n)), -1e-12);
  }
}

TEST(QuadraticRep, Examples) {
  SymMatrix id{{1.0, 0.0}, {0.0, 1.0}};
  SymMatrix x{{0.3, -0.2}, {-0.2, 0.9}};
  EXPECT_LT(max_abs_diff(quadratic_rep(id, x).to_full(), x.to_full()), 1e-15);

  SymMatrix diag{{2.0, 0.0}, {0.0, 3.0}};
  SymMatrix mapped = quadratic_rep(diag, x);
  EXPECT_DOUBLE_EQ(mapped(0, 0), 4.0 * x(0, 0));
  EXPECT_DOUBLE_EQ(mapped(0, 1), 6.0 * x(0, 1));
  EXPECT_DOUBLE_EQ(mapped(1, 1), 9.0 * x(1, 1));

  SymMatrix ones{{1.0, 1.0}, {1.0, 1.0}};
  SymMatrix y{{0.0, 0.0}, {0.0, 1.0}};
  Matrix expected{{1.0, 1.0}, {1.0, 1.0}};
  EXPECT_LT(max_abs_diff(quadratic_rep(ones, y).to_full(), expected), 1e-15);
}

TEST(QuadraticRep, PreservesPsd) {
  testutil::Rng rng(137);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + trial % 3;
    SymMatrix a = random_sym(rng, n);
    SymMatrix x = random_psd(rng, n);
    double lmin = sym_eig_extremes(quadratic_rep(a, x).to_full()).lambda_min;
    EXPECT_GE(lmin, -1e-10);
  }
}

TEST(JordanQuadraticRep, Examples) {
  SymMatrix id{{1.0, 0.0}, {0.0, 1.0}};
  SymMatrix x{{0.4, 0.1}, {0.1, -0.6}};
  EXPECT_LT(max_abs_diff(jordan_quadratic_rep(id, x).to_full(), x.to_full()),
            1e-15);

  // P_a(I) = a^2
  SymMatrix a{{2.0, 0.0}, {0.0, 3.0}};
  Matrix expected{{4.0, 0.0}, {0.0, 9.0}};
  EXPECT_LT(max_abs_diff(jordan_quadratic_rep(a, id).to_full(), expected),
            1e-15);
}

TEST(JordanQuadraticRep, MatchesDirectProduct) {
  testutil::Rng rng(139);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = 2 + trial % 2;
    SymMatrix a = random_sym(rng, n);
    SymMatrix x = random_sym(rng, n);
    EXPECT_LT(max_abs_diff(jordan_quadratic_rep(a, x).to_full(),
                           quadratic_rep(a, x).to_full()),
              1e-12);
  }
}

TEST(NonDiffusivityDemo, FixedValues) {
  PsdDemoReport rep = non_diffusivity_demo();
  EXPECT_EQ(rep.xy_inner, 0.0);
  EXPECT_NEAR(rep.x_aya_inner, 1.0, 1e-12);
  Matrix expected{{1.0, 1.0}, {1.0, 1.0}};
  EXPECT_LT(max_abs_diff(rep.aya.to_full(), expected), 1e-15);

  // with A = I the image of Y keeps the orthogonality
  SymMatrix identity{{1.0, 0.0}, {0.0, 1.0}};
  EXPECT_DOUBLE_EQ(trace_inner(rep.x, quadratic_rep(identity, rep.y)), 0.0);
}

TEST(SymMatrix, Validation) {
  EXPECT_THROW(SymMatrix(9), error);  // demo cap
  EXPECT_THROW(SymMatrix::from_full(Matrix{{0.0, 1.0}, {0.0, 0.0}}), error);
  EXPECT_THROW(SymMatrix::from_full(Matrix(2, 3)), error);
}
