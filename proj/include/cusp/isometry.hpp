#pragma once

#include <optional>
#include <string_view>

#include "cusp/lattice.hpp"
#include "cusp/polynomial.hpp"

namespace cusp {

/// Integer matrix acting on column coordinate vectors and preserving the form.
class Isometry {
 public:
  /// Throws std::invalid_argument unless m^T G m == G and det m == +-1.
  Isometry(GramLattice ambient, Matrix m);

  static Isometry identity(const GramLattice& l) { return Isometry(l, Matrix::identity(l.rank())); }

  const GramLattice& ambient() const { return ambient_; }
  const Matrix& matrix() const { return matrix_; }

  Vector apply(const Vector& v) const { return matrix_ * v; }
  Isometry compose(const Isometry& inner) const;  // this after inner
  Isometry inverse() const;
  Isometry power(long e) const;

  /// Matrix of the induced action on a sublattice it preserves, in the
  /// sublattice's own coordinates. Throws if the sublattice is not preserved.
  Isometry restrict_to(const Sublattice& sub) const;

  friend bool operator==(const Isometry& a, const Isometry& b) {
    return a.matrix_ == b.matrix_ && a.ambient_.gram() == b.ambient_.gram();
  }

 private:
  GramLattice ambient_;
  Matrix matrix_;
};

bool commute(const Isometry& a, const Isometry& b);

enum class IsometryKind { elliptic, parabolic, hyperbolic };

std::string_view to_string(IsometryKind k);

struct IsometryType {
  IsometryKind kind = IsometryKind::elliptic;
  unsigned long order = 0;              // elliptic only
  std::optional<Vector> fixed_isotropic;  // parabolic only
  Polynomial characteristic;
};

/// Elliptic / parabolic / hyperbolic classification on a lattice of signature (1, n).
IsometryType classify_isometry(const Isometry& g);

/// Primitive isotropic generator of the radical of the fixed sublattice of g,
/// sign-normalized. Throws unless that radical has rank one.
Vector fixed_isotropic_vector(const Isometry& g);

}  // namespace cusp
