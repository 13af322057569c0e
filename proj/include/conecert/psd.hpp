#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "conecert/errors.hpp"
#include "conecert/matrix.hpp"

namespace conecert {

/// Symmetric matrix with packed upper-triangle storage, demo scale (n <= 8).
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t order) : n_(order) {
    if (order == 0) fail(errc::invalid_argument, "order must be positive");
    if (order > 8) fail(errc::scale_too_large, "SymMatrix capped at order 8");
    packed_.assign(order * (order + 1) / 2, 0.0);
  }

  SymMatrix(std::initializer_list<std::initializer_list<double>> init)
      : SymMatrix(from_full(Matrix(init))) {}

  static SymMatrix from_full(const Matrix& m, double tol = kDefaultTol) {
    if (!m.is_square()) fail(errc::dimension_mismatch, "matrix not square");
    if (symmetry_defect(m) > tol * std::max(1.0, m.frobenius_norm()))
      fail(errc::not_symmetric, "matrix is not symmetric");
    SymMatrix s(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = i; j < m.cols(); ++j)
        s.packed_[s.index(i, j)] = 0.5 * (m(i, j) + m(j, i));
    return s;
  }

  std::size_t order() const { return n_; }

  double operator()(std::size_t i, std::size_t j) const {
    return packed_[index(std::min(i, j), std::max(i, j))];
  }

  void set(std::size_t i, std::size_t j, double v) {
    packed_[index(std::min(i, j), std::max(i, j))] = v;
  }

  Matrix to_full() const {
    Matrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
    return m;
  }

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    return i * n_ - i * (i - 1) / 2 + (j - i);
  }

  std::size_t n_;
  std::vector<double> packed_;
};

/// trace(XY); the inner product making the psd cone self-dual.
inline double trace_inner(const SymMatrix& x, const SymMatrix& y) {
  if (x.order() != y.order())
    fail(errc::dimension_mismatch, "orders differ");
  double s = 0.0;
  for (std::size_t i = 0; i < x.order(); ++i)
    for (std::size_t j = 0; j < x.order(); ++j) s += x(i, j) * y(i, j);
  return s;
}

/// Quadratic representation on symmetric matrices: X -> A X A.
inline SymMatrix quadratic_rep(const SymMatrix& a, const SymMatrix& x) {
  if (a.order() != x.order())
    fail(errc::dimension_mismatch, "orders differ");
  Matrix full = a.to_full() * x.to_full() * a.to_full();
  return SymMatrix::from_full(symmetrize(full));
}

/// Jordan product A o B = (AB + BA) / 2.
inline SymMatrix jordan_product(const SymMatrix& a, const SymMatrix& b) {
  if (a.order() != b.order())
    fail(errc::dimension_mismatch, "orders differ");
  Matrix ab = a.to_full() * b.to_full();
  return SymMatrix::from_full(symmetrize(ab));
}

/// Jordan-algebraic quadratic representation P_a(x) = 2 a o (a o x) - a^2 o x;
/// on symmetric matrices this coincides with a x a.
inline SymMatrix jordan_quadratic_rep(const SymMatrix& a, const SymMatrix& x) {
  SymMatrix inner = jordan_product(a, jordan_product(a, x));
  SymMatrix square_term = jordan_product(jordan_product(a, a), x);
  Matrix out = 2.0 * inner.to_full() - square_term.to_full();
  return SymMatrix::from_full(out);
}

/// Fixed demonstration that a quadratic representation need not act
/// diffusively on the psd cone: X and Y below are orthogonal under the trace
/// inner product, yet <X, A Y A> = 1 > 0.
struct PsdDemoReport {
  SymMatrix x{{1.0, 0.0}, {0.0, 0.0}};
  SymMatrix y{{0.0, 0.0}, {0.0, 1.0}};
  SymMatrix a{{1.0, 1.0}, {1.0, 1.0}};
  SymMatrix aya{{0.0, 0.0}, {0.0, 0.0}};
  double xy_inner = 0.0;
  double x_aya_inner = 0.0;
};

inline PsdDemoReport non_diffusivity_demo() {
  PsdDemoReport rep;
  rep.aya = quadratic_rep(rep.a, rep.y);
  rep.xy_inner = trace_inner(rep.x, rep.y);
  rep.x_aya_inner = trace_inner(rep.x, rep.aya);
  return rep;
}

}  // namespace conecert
