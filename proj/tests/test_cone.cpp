#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "conecert/cone.hpp"
#include "conecert/io.hpp"
#include "test_util.hpp"

using namespace conecert;

namespace {
const double kRoot2Half = std::sqrt(0.5);

Matrix rotation45() {
  return Matrix{{kRoot2Half, -kRoot2Half}, {kRoot2Half, kRoot2Half}};
}
}  // namespace

TEST(Cone, OrthantGenerators) {
  auto gens = ConeModel::orthant(2).generators();
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens[0][0], 1.0);
  EXPECT_EQ(gens[0][1], 0.0);
  EXPECT_EQ(gens[1][1], 1.0);
}

TEST(Cone, RotatedGeneratorsAreColumns) {
  auto k = ConeModel::rotated_orthant(rotation45());
  auto gens = k.generators();
  EXPECT_NEAR(gens[0][0], kRoot2Half, 1e-15);
  EXPECT_NEAR(gens[0][1], kRoot2Half, 1e-15);
  EXPECT_NEAR(gens[1][0], -kRoot2Half, 1e-15);
  EXPECT_NEAR(gens[1][1], kRoot2Half, 1e-15);

  auto id = ConeModel::rotated_orthant(Matrix::identity(2)).generators();
  EXPECT_EQ(id[0][0], 1.0);
  EXPECT_EQ(id[1][1], 1.0);
}

TEST(Cone, PsdHasNoGenerators) {
  EXPECT_THROW(ConeModel::psd(2).generators(), error);
}

TEST(Cone, RejectsNonOrthogonalRotation) {
  EXPECT_THROW(ConeModel::rotated_orthant(Matrix{{1.0, 1.0}, {0.0, 1.0}}),
               error);
}

TEST(Cone, MembershipOrthantExamples) {
  auto k = ConeModel::orthant(2);
  EXPECT_EQ(membership(k, Vector{1.0, 1.0}).classification,
            Membership::interior);
  EXPECT_EQ(membership(k, Vector{1.0, 0.0}).classification,
            Membership::boundary);
  EXPECT_EQ(membership(k, Vector{-1.0, 0.0}).classification,
            Membership::outside);
}

TEST(Cone, GeneratorsSitOnTheBoundary) {
  testutil::Rng rng(5);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (auto& fam : testutil::cone_families(rng, n)) {
      for (const auto& g : fam.cone.generators())
        EXPECT_EQ(membership(fam.cone, g).classification,
                  Membership::boundary);
    }
  }
}

TEST(Cone, VerifySelfDualExamples) {
  EXPECT_TRUE(verify_self_dual(Matrix::identity(3)));
  testutil::Rng rng(9);
  EXPECT_TRUE(verify_self_dual(testutil::random_orthogonal(rng, 3)));

  // Oracle for the sheared generators: dual generators are the columns of
  // (G^T)^{-1} = [[1, 0], [-1, 1]]; normalized, (1,-1)/sqrt(2) does not match
  // either primal unit generator (1,0) or (1,1)/sqrt(2).
  Matrix g{{1.0, 1.0}, {0.0, 1.0}};
  EXPECT_FALSE(verify_self_dual(g));
  EXPECT_THROW(ConeModel::simplicial(g), error);

  // random non-orthogonal shears keep failing self-duality
  for (int trial = 0; trial < 20; ++trial) {
    Matrix shear = Matrix::identity(3);
    shear(0, 1) = testutil::uniform(rng, 0.2, 1.0);
    shear(1, 2) = testutil::uniform(rng, 0.2, 1.0);
    EXPECT_FALSE(verify_self_dual(shear));
  }
}

TEST(Cone, SimplicialAcceptsScaledOrthogonalFrames) {
  testutil::Rng rng(31);
  Matrix o = testutil::random_orthogonal(rng, 3);
  Matrix scaled = o;
  for (std::size_t j = 0; j < 3; ++j)
    scaled.set_column(j, o.column(j) * testutil::uniform(rng, 0.5, 3.0));
  auto k = ConeModel::simplicial(scaled);
  // generators come back unit-normalized
  for (const auto& g : k.generators()) EXPECT_NEAR(g.norm2(), 1.0, 1e-12);
}

TEST(Cone, CoordinatesExamples) {
  auto orthant = ConeModel::orthant(2);
  Vector c = coordinates(orthant, Vector{3.0, 5.0});
  EXPECT_DOUBLE_EQ(c[0], 3.0);
  EXPECT_DOUBLE_EQ(c[1], 5.0);

  auto rot = ConeModel::rotated_orthant(rotation45());
  Vector x = rotation45() * Vector{1.0, 2.0};
  Vector back = coordinates(rot, x);
  EXPECT_NEAR(back[0], 1.0, 1e-12);
  EXPECT_NEAR(back[1], 2.0, 1e-12);

  auto scaled = ConeModel::simplicial(2.0 * Matrix::identity(2));
  Vector sc = coordinates(scaled, Vector{2.0, 0.0});
  EXPECT_NEAR(sc[0], 2.0, 1e-12);  // unit generators, so coordinates match x
  EXPECT_NEAR(sc[1], 0.0, 1e-12);
}

TEST(Cone, InteriorPointExamples) {
  Vector p = interior_point(ConeModel::orthant(3));
  EXPECT_EQ(p[0], 1.0);
  EXPECT_EQ(p[1], 1.0);
  EXPECT_EQ(p[2], 1.0);

  auto rot = ConeModel::rotated_orthant(rotation45());
  Vector q = interior_point(rot);
  Vector expected = rotation45() * Vector{1.0, 1.0};
  EXPECT_LT(max_abs_diff(q, expected), 1e-12);
  EXPECT_EQ(membership(rot, q).classification, Membership::interior);
}

TEST(Cone, MembershipMatchesCoordinateSign) {
  testutil::Rng rng(41);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (auto& fam : testutil::cone_families(rng, n)) {
      for (int trial = 0; trial < 250; ++trial) {
        Vector x(n);
        for (std::size_t i = 0; i < n; ++i)
          x[i] = testutil::uniform(rng, -1.0, 1.0);
        auto verdict = membership(fam.cone, x).classification;
        double min_coord = coordinates(fam.cone, x).min_entry();
        if (verdict == Membership::interior)
          EXPECT_GT(min_coord, 0.0);
        else if (verdict == Membership::outside)
          EXPECT_LT(min_coord, 0.0);
      }
    }
  }
}

TEST(Cone, PsdMembershipMatchesLambdaMinSign) {
  testutil::Rng rng(43);
  auto k = ConeModel::psd(3);
  for (int trial = 0; trial < 200; ++trial) {
    Matrix s = testutil::random_symmetric(rng, 3, -1.0, 1.0);
    Vector flat(9);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) flat[3 * i + j] = s(i, j);
    auto verdict = membership(k, flat);
    double lmin = sym_eig_extremes(s).lambda_min;
    if (lmin > 1e-9 * s.frobenius_norm())
      EXPECT_EQ(verdict.classification, Membership::interior);
    else if (lmin < -1e-9 * s.frobenius_norm())
      EXPECT_EQ(verdict.classification, Membership::outside);
  }
}

TEST(ConeSpec, ParseAllKinds) {
  EXPECT_EQ(parse_cone_spec("orthant 3").kind(), ConeModel::Kind::orthant);
  EXPECT_EQ(parse_cone_spec("psd 2").kind(), ConeModel::Kind::psd);

  auto rot = parse_cone_spec("rotated 2\n0.70710678118654752 -0.70710678118654752\n"
                             "0.70710678118654752 0.70710678118654752\n");
  EXPECT_EQ(rot.kind(), ConeModel::Kind::rotated_orthant);

  auto simp = parse_cone_spec("# scaled orthant\nsimplicial 2\n2 0\n0 3\n");
  EXPECT_EQ(simp.kind(), ConeModel::Kind::simplicial);

  EXPECT_THROW(parse_cone_spec("wedge 2"), parse_error);
  EXPECT_THROW(parse_cone_spec("orthant 0"), parse_error);
}

TEST(ConeSpec, RoundTrip) {
  testutil::Rng rng(47);
  auto k = ConeModel::rotated_orthant(testutil::random_orthogonal(rng, 3));
  std::ostringstream out;
  write_cone_spec(out, k);
  auto back = parse_cone_spec(out.str());
  EXPECT_EQ(back.kind(), k.kind());
  EXPECT_EQ(max_abs_diff(back.generator_matrix(), k.generator_matrix()), 0.0);
}
