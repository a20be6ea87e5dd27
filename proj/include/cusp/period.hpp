#pragma once

#include <optional>
#include <vector>

#include "cusp/enumeration.hpp"
#include "cusp/surface.hpp"

namespace cusp {

/// Torsion period point: a homomorphism Lambda(Y,D) -> Z/m, where residue 1
/// stands for a fixed primitive m-th root of unity in Pic^0(D) = G_m.
/// Sign convention: for sections C, C' meeting the same component at p, p',
/// the value on C - C' is the residue of O_D(p - p').
class PeriodPoint {
 public:
  PeriodPoint(Sublattice domain, Integer modulus, Vector values);

  const Sublattice& domain() const { return domain_; }
  const Integer& modulus() const { return modulus_; }
  const Vector& values() const { return values_; }

  /// Value on a class of the ambient Picard lattice lying in the domain.
  Integer evaluate(const Vector& ambient_class) const;
  /// Value on a vector given in domain coordinates.
  Integer evaluate_coordinates(const Vector& coords) const;

  /// Additive order of a residue in Z/m.
  Integer order_of(const Integer& residue) const;

 private:
  Sublattice domain_;
  Integer modulus_;
  Vector values_;
};

PeriodPoint trivial_period_point(const Sublattice& domain);

enum class ConstraintKind { equals_zero, nonzero };

struct PeriodConstraint {
  Vector target;  // ambient class in the domain
  ConstraintKind kind = ConstraintKind::equals_zero;
};

/// Homomorphism to Z/modulus meeting every constraint; nullopt if none exists.
std::optional<PeriodPoint> solve_period(const Sublattice& domain, const std::vector<PeriodConstraint>& constraints,
                                        const Integer& modulus);

/// Tries modulus = 1, 2, ..., bound and returns the first feasible solution.
/// Throws std::domain_error("no torsion period point satisfies constraints") otherwise.
PeriodPoint solve_period_search(const Sublattice& domain, const std::vector<PeriodConstraint>& constraints,
                                unsigned long bound = 64);

bool satisfies(const PeriodPoint& phi, const std::vector<PeriodConstraint>& constraints);

/// True iff phi is nonzero on every root. Roots are given in domain
/// coordinates, modulo the radical, as returned by vectors_of_square on the
/// domain lattice.
bool is_generic(const PeriodPoint& phi, const ShortVectors& roots);

/// True if some element of rep + span(radical) has value zero.
bool coset_vanishes(const PeriodPoint& phi, const Vector& rep, const Matrix& radical);

/// Order of the image of phi.
Integer section_residue_bound(const PeriodPoint& phi);

/// A point on the interior of a boundary component, recorded by a reference
/// section through that component and the residue of O_D(p - p0), p0 being
/// where the reference meets the boundary.
struct BoundaryPoint {
  std::size_t component = 0;
  Vector reference;  // (-1)-class meeting only `component`, once
  Integer offset = 0;
};

/// Period point of the blow-up `blown` of `base` at `point`.
/// `blown` must be interior_blowup(base, point.component).
PeriodPoint period_after_blowup(const PeriodPoint& base_period, const LooijengaSurface& base,
                                const LooijengaSurface& blown, const BoundaryPoint& point);

/// Period point of a blow-down, pulled back through the embedding.
PeriodPoint period_after_blowdown(const PeriodPoint& period, const BlowDown& contraction);

}  // namespace cusp
