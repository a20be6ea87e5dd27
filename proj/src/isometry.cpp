#include "cusp/isometry.hpp"

#include <stdexcept>

#include "cusp/normal_form.hpp"

namespace cusp {

Isometry::Isometry(GramLattice ambient, Matrix m) : ambient_(std::move(ambient)), matrix_(std::move(m)) {
  if (matrix_.rows() != ambient_.rank() || matrix_.cols() != ambient_.rank())
    throw std::invalid_argument("isometry matrix has wrong shape");
  if (matrix_.transpose() * ambient_.gram() * matrix_ != ambient_.gram())
    throw std::invalid_argument("matrix does not preserve the Gram form");
  Integer d = determinant(matrix_);
  if (d != 1 && d != -1) throw std::invalid_argument("matrix is not invertible over the integers");
}

Isometry Isometry::compose(const Isometry& inner) const {
  if (inner.ambient_.gram() != ambient_.gram()) throw std::invalid_argument("composing isometries of different lattices");
  return Isometry(ambient_, matrix_ * inner.matrix_);
}

Isometry Isometry::inverse() const { return Isometry(ambient_, unimodular_inverse(matrix_)); }

Isometry Isometry::power(long e) const {
  if (e < 0) return inverse().power(-e);
  return Isometry(ambient_, cusp::power(matrix_, static_cast<unsigned long>(e)));
}

Isometry Isometry::restrict_to(const Sublattice& sub) const {
  if (sub.ambient().gram() != ambient_.gram()) throw std::invalid_argument("sublattice of a different lattice");
  const std::size_t k = sub.rank();
  Matrix r(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    auto coords = sub.coordinates(apply(sub.basis().row(i)));
    if (!coords) throw std::invalid_argument("isometry does not preserve the sublattice");
    for (std::size_t j = 0; j < k; ++j) r(j, i) = (*coords)[j];
  }
  return Isometry(sub.as_lattice(), r);
}

bool commute(const Isometry& a, const Isometry& b) { return a.matrix() * b.matrix() == b.matrix() * a.matrix(); }

std::string_view to_string(IsometryKind k) {
  switch (k) {
    case IsometryKind::elliptic: return "elliptic";
    case IsometryKind::parabolic: return "parabolic";
    case IsometryKind::hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

Vector fixed_isotropic_vector(const Isometry& g) {
  const std::size_t n = g.ambient().rank();
  Matrix shifted = g.matrix() - Matrix::identity(n);
  Sublattice fixed(g.ambient(), left_kernel(shifted.transpose()));
  Matrix rad = left_kernel(fixed.induced_gram());
  if (rad.rows() != 1) throw std::domain_error("fixed sublattice does not have a rank-one radical");
  Vector v = primitive_normalized(fixed.to_ambient(rad.row(0)));
  if (g.ambient().norm(v) != 0 || g.apply(v) != v) throw std::logic_error("fixed radical vector is not isotropic");
  return v;
}

IsometryType classify_isometry(const Isometry& g) {
  Signature sig = g.ambient().signature();
  if (sig.positive != 1 || sig.negative < 1 || sig.null != 0)
    throw std::domain_error("classify_isometry: ambient lattice must have signature (1,n), got " + to_string(sig));

  IsometryType t;
  t.characteristic = characteristic_polynomial(g.matrix());
  CyclotomicSplit split = split_cyclotomic(t.characteristic);
  if (split.rest.degree() > 0) {
    t.kind = IsometryKind::hyperbolic;
    return t;
  }
  Integer big_n = 1;
  for (unsigned long d : split.orders) big_n = lcm(big_n, Integer(d));
  const unsigned long n = big_n.get_ui();
  if (cusp::power(g.matrix(), n).is_identity()) {
    t.kind = IsometryKind::elliptic;
    for (unsigned long k = 1; k <= n; ++k)
      if (n % k == 0 && cusp::power(g.matrix(), k).is_identity()) {
        t.order = k;
        break;
      }
    return t;
  }
  t.kind = IsometryKind::parabolic;
  t.fixed_isotropic = fixed_isotropic_vector(g);
  return t;
}

}  // namespace cusp
