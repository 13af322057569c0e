#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "conecert/eig.hpp"
#include "conecert/errors.hpp"
#include "conecert/matrix.hpp"
#include "conecert/solve.hpp"

namespace conecert {

/// Self-duality test for a simplicial cone given by the columns of G.
///
/// The dual of cone(G) is the simplicial cone generated by the columns of
/// (G^T)^{-1}; both generator sets are normalized to unit vectors and the
/// cone is self-dual exactly when the two sets coincide up to permutation.
inline bool verify_self_dual(const Matrix& g, double match_tol = 1e-8) {
  if (!g.is_square() || g.rows() == 0)
    fail(errc::dimension_mismatch, "generator matrix must be square");
  const std::size_t n = g.rows();
  auto f = detail::lu_factor(g.transpose());
  if (f.singular)
    fail(errc::singular_generators, "generators are linearly dependent");
  Matrix dual(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector e(n);
    e[j] = 1.0;
    dual.set_column(j, detail::lu_apply(f, e));
  }

  auto unit_columns = [](const Matrix& m) {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Vector c = m.column(j);
      double nrm = c.norm2();
      if (nrm == 0.0) fail(errc::singular_generators, "zero generator");
      cols.push_back(c * (1.0 / nrm));
    }
    return cols;
  };

  auto primal = unit_columns(g);
  auto duals = unit_columns(dual);
  std::vector<bool> used(n, false);
  for (const auto& dv : duals) {
    bool matched = false;
    for (std::size_t k = 0; k < n; ++k) {
      if (used[k]) continue;
      if (max_abs_diff(dv, primal[k]) <= match_tol) {
        used[k] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

enum class Membership { interior, boundary, outside };

inline const char* membership_name(Membership m) {
  switch (m) {
    case Membership::interior: return "interior";
    case Membership::boundary: return "boundary";
    case Membership::outside: return "outside";
  }
  return "unknown";
}

struct MembershipVerdict {
  Membership classification = Membership::boundary;
  std::vector<double> products;  // per-generator inner products (eigenvalues for psd)
  double worst = 0.0;            // min of products
};

/// A proper self-dual cone in one of four concrete representations.
///
/// The polyhedral representations (orthant, rotated orthant, simplicial
/// self-dual) expose unit generators; the psd cone is a demo-scale citizen
/// whose ambient space is n x n symmetric matrices under the trace inner
/// product, addressed through row-major vectorization of length n^2.
class ConeModel {
 public:
  enum class Kind { orthant, rotated_orthant, simplicial, psd };

  static ConeModel orthant(std::size_t n) {
    if (n == 0) fail(errc::invalid_argument, "cone dimension must be positive");
    return ConeModel(Kind::orthant, n, Matrix::identity(n));
  }

  static ConeModel rotated_orthant(Matrix o) {
    if (!o.is_square() || o.rows() == 0)
      fail(errc::invalid_argument, "rotation matrix must be square");
    Matrix gram = o.transpose() * o;
    if (max_abs_diff(gram, Matrix::identity(o.rows())) > 1e-9)
      fail(errc::invalid_argument, "matrix is not orthogonal to 1e-9");
    std::size_t n = o.rows();
    return ConeModel(Kind::rotated_orthant, n, std::move(o));
  }

  static ConeModel simplicial(const Matrix& g) {
    if (!g.is_square() || g.rows() == 0)
      fail(errc::invalid_argument, "generator matrix must be square");
    if (!verify_self_dual(g))
      fail(errc::not_self_dual, "generators do not span a self-dual cone");
    const std::size_t n = g.rows();
    Matrix unit(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      Vector c = g.column(j);
      unit.set_column(j, c * (1.0 / c.norm2()));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (unit.column(i).dot(unit.column(j)) < -1e-12)
          fail(errc::not_self_dual,
               "self-dual simplicial generators must have nonnegative Gram");
    return ConeModel(Kind::simplicial, n, std::move(unit));
  }

  static ConeModel psd(std::size_t order) {
    if (order == 0) fail(errc::invalid_argument, "psd order must be positive");
    if (order > 8) fail(errc::scale_too_large, "psd cone capped at order 8");
    return ConeModel(Kind::psd, order, Matrix());
  }

  Kind kind() const { return kind_; }
  bool is_simplicial() const { return kind_ != Kind::psd; }

  /// n for the polyhedral cones; matrix order for psd.
  std::size_t order() const { return n_; }

  /// Dimension of the ambient vector space (n, or n^2 for psd).
  std::size_t ambient_dim() const {
    return kind_ == Kind::psd ? n_ * n_ : n_;
  }

  /// Unit generator columns; identity for the orthant, O for the rotated
  /// orthant, normalized G for the simplicial case.
  const Matrix& generator_matrix() const {
    if (kind_ == Kind::psd)
      fail(errc::unsupported_cone, "psd cone has no finite generating set");
    return basis_;
  }

  std::vector<Vector> generators() const {
    const Matrix& g = generator_matrix();
    std::vector<Vector> out;
    out.reserve(n_);
    for (std::size_t j = 0; j < n_; ++j) out.push_back(g.column(j));
    return out;
  }

  bool has_orthonormal_generators(double tol = 1e-9) const {
    if (kind_ == Kind::psd) return false;
    if (kind_ != Kind::simplicial) return true;
    Matrix gram = basis_.transpose() * basis_;
    return max_abs_diff(gram, Matrix::identity(n_)) <= tol;
  }

 private:
  ConeModel(Kind kind, std::size_t n, Matrix basis)
      : kind_(kind), n_(n), basis_(std::move(basis)) {}

  Kind kind_;
  std::size_t n_;
  Matrix basis_;
};

inline const char* cone_kind_name(ConeModel::Kind k) {
  switch (k) {
    case ConeModel::Kind::orthant: return "orthant";
    case ConeModel::Kind::rotated_orthant: return "rotated";
    case ConeModel::Kind::simplicial: return "simplicial";
    case ConeModel::Kind::psd: return "psd";
  }
  return "unknown";
}

/// Classify x against K. For self-dual K the generator products decide
/// membership exactly: x is in K iff <g_i, x> >= 0 for every generator, and
/// interior iff all products are strictly positive. For the psd cone the
/// products are the eigenvalues of the vectorized symmetric matrix.
inline MembershipVerdict membership(const ConeModel& k, const Vector& x,
                                    double tol = kDefaultTol) {
  MembershipVerdict v;
  if (k.kind() == ConeModel::Kind::psd) {
    const std::size_t n = k.order();
    if (x.dim() != n * n)
      fail(errc::dimension_mismatch, "psd membership expects n^2 entries");
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = x[i * n + j];
    v.products = sym_eigenvalues(m);  // rejects asymmetric input
    v.worst = v.products.front();
    double scale = m.frobenius_norm();
    if (v.worst > tol * scale)
      v.classification = Membership::interior;
    else if (v.worst < -tol * scale)
      v.classification = Membership::outside;
    else
      v.classification = Membership::boundary;
    return v;
  }

  if (x.dim() != k.ambient_dim())
    fail(errc::dimension_mismatch, "vector dimension does not match cone");
  const Matrix& g = k.generator_matrix();
  v.products.resize(k.order());
  v.worst = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < k.order(); ++i) {
    v.products[i] = g.column(i).dot(x);
    v.worst = std::min(v.worst, v.products[i]);
  }
  double scale = x.norm2();
  if (v.worst > tol * scale)
    v.classification = Membership::interior;
  else if (v.worst < -tol * scale)
    v.classification = Membership::outside;
  else
    v.classification = Membership::boundary;
  return v;
}

/// Coordinates of x in the unit generator basis (simplicial cones only);
/// membership in K is equivalent to all coordinates >= -tol.
inline Vector coordinates(const ConeModel& k, const Vector& x) {
  if (!k.is_simplicial())
    fail(errc::unsupported_cone, "coordinates need a simplicial cone");
  if (x.dim() != k.ambient_dim())
    fail(errc::dimension_mismatch, "vector dimension does not match cone");
  if (k.kind() == ConeModel::Kind::orthant) return x;
  auto f = detail::lu_factor(k.generator_matrix());
  if (f.singular) fail(errc::singular_generators, "generators degenerate");
  return detail::lu_apply(f, x);
}

/// Sum of the unit generators; asserted interior before returning.
inline Vector interior_point(const ConeModel& k, double tol = kDefaultTol) {
  if (!k.is_simplicial())
    fail(errc::unsupported_cone, "interior_point needs a simplicial cone");
  Vector p(k.ambient_dim());
  const Matrix& g = k.generator_matrix();
  for (std::size_t j = 0; j < k.order(); ++j) p += g.column(j);
  if (membership(k, p, tol).classification != Membership::interior)
    fail(errc::internal_verification_failed,
         "generator sum failed the interior check");
  return p;
}

}  // namespace conecert
