#include <gtest/gtest.h>

#include <sstream>

#include "conecert/errors.hpp"
#include "conecert/io.hpp"
#include "conecert/matrix.hpp"
#include "test_util.hpp"

using namespace conecert;

TEST(Matrix, BasicArithmetic) {
  Matrix a{{1.0, 2.0}, {3.0, 4.0}};
  Matrix t = a.transpose();
  EXPECT_EQ(t(0, 1), 3.0);
  EXPECT_EQ(t(1, 0), 2.0);

  Vector x{1.0, -1.0};
  Vector y = a * x;
  EXPECT_DOUBLE_EQ(y[0], -1.0);
  EXPECT_DOUBLE_EQ(y[1], -1.0);

  Matrix id = Matrix::identity(2);
  EXPECT_EQ(max_abs_diff(a * id, a), 0.0);
  EXPECT_EQ(max_abs_diff(id * a, a), 0.0);
}

TEST(Matrix, RejectsNonFinite) {
  EXPECT_THROW(Matrix({{1.0, std::numeric_limits<double>::quiet_NaN()},
                       {0.0, 1.0}}),
               error);
  EXPECT_THROW(Vector({std::numeric_limits<double>::infinity()}), error);
}

TEST(Matrix, DimensionMismatchThrows) {
  Matrix a(2, 3);
  Matrix b(2, 2);
  EXPECT_THROW(a * b, error);
  EXPECT_THROW(a + b, error);
  EXPECT_THROW(Vector({1.0}).dot(Vector({1.0, 2.0})), error);
}

TEST(Matrix, SymmetryHelpers) {
  Matrix s{{1.0, 2.0}, {2.0, 5.0}};
  EXPECT_TRUE(is_symmetric(s));
  Matrix a{{1.0, 2.0}, {2.5, 5.0}};
  EXPECT_FALSE(is_symmetric(a));
  EXPECT_NEAR(symmetry_defect(a), 0.5, 1e-15);
  EXPECT_TRUE(is_symmetric(symmetrize(a)));
}

TEST(MatrixIo, ParsesWhitespaceAndComments) {
  std::string text =
      "# demo matrix\n"
      "2 2\n"
      "1.5 -0.25   # row one\n"
      "0  2e-3\n";
  Matrix m = parse_matrix(text);
  ASSERT_EQ(m.rows(), 2u);
  ASSERT_EQ(m.cols(), 2u);
  EXPECT_DOUBLE_EQ(m(0, 0), 1.5);
  EXPECT_DOUBLE_EQ(m(0, 1), -0.25);
  EXPECT_DOUBLE_EQ(m(1, 1), 2e-3);
}

TEST(MatrixIo, RoundTripIsExact) {
  testutil::Rng rng(7);
  Matrix m = testutil::random_matrix(rng, 3, -5.0, 5.0);
  std::ostringstream out;
  write_matrix(out, m);
  Matrix back = parse_matrix(out.str());
  EXPECT_EQ(max_abs_diff(m, back), 0.0);  // 17 significant digits round-trip
}

TEST(MatrixIo, ReportsLineAndColumn) {
  try {
    parse_matrix("2 2\n1 2\n3 oops\n");
    FAIL() << "expected parse error";
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(MatrixIo, RejectsTrailingInput) {
  EXPECT_THROW(parse_matrix("1 1\n2.0\n3.0\n"), parse_error);
  EXPECT_THROW(parse_matrix("2 2\n1 2 3\n"), parse_error);
  EXPECT_THROW(parse_matrix("2 2\n1 2\n3 inf\n"), parse_error);
}
