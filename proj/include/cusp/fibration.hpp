#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cusp/isometry.hpp"
#include "cusp/period.hpp"

namespace cusp {

/// Components of one reducible fiber, with Kodaira multiplicities.
struct FiberConfiguration {
  std::vector<Vector> classes;
  std::vector<Integer> multiplicities;
  std::string kodaira_type;

  std::size_t components() const { return classes.size(); }
};

/// Recognizes cycles (I_n) and affine D/E trees from the dual graph of
/// (-2)-classes; the weighted sum must be isotropic and orthogonal to every
/// component.
FiberConfiguration classify_configuration(const GramLattice& l, const std::vector<Vector>& classes);

struct EllipticFibration {
  Vector fiber;              // F = m D
  Integer multiplicity = 1;  // m
  bool has_section = false;
  std::optional<Vector> zero_section;
  std::vector<FiberConfiguration> reducible_fibers;  // boundary fiber first
  std::optional<long> mw_rank;
};

/// The fibration with F = mD, m the order of phi(D). Only the boundary
/// fiber is filled in; see analyze_fibration.
EllipticFibration fiber_from_boundary(const LooijengaSurface& s, const PeriodPoint& phi);

/// rho - 2 - sum (m_p - 1).
long shioda_tate_rank(long rho, const std::vector<FiberConfiguration>& fibers);

/// Fibers made of internal (-2)-classes on which phi vanishes. Roots are in
/// coordinates of `lambda`, modulo its rank-one radical, which must contain F.
std::vector<FiberConfiguration> extra_reducible_fibers(const Sublattice& lambda, const Vector& fiber,
                                                       const ShortVectors& roots, const PeriodPoint& phi);

/// fiber_from_boundary followed by the extra fibers and the Shioda-Tate rank.
EllipticFibration analyze_fibration(const LooijengaSurface& s, const PeriodPoint& phi);

/// x -> x + (x.F) e - (x.e) F - (e.e / 2)(x.F) F for isotropic F and e orthogonal to F.
Isometry eichler_transvection(const GramLattice& l, const Vector& fiber, const Vector& direction);

struct TranslationGroup {
  Vector fiber;
  std::vector<Vector> directions;  // e_i, ambient coordinates
  std::vector<Isometry> generators;
};

/// Eichler transvections E(F, e_i) for a basis e_i of the directions in
/// Lambda orthogonal to every extra fiber component, modulo the fiber line.
/// With `fixing`, directions are restricted to its kernel, which keeps the
/// point where each section meets the boundary.
TranslationGroup mw_translation_group(const LooijengaSurface& s, const EllipticFibration& fib,
                                      const PeriodPoint* fixing = nullptr);

/// Primitive isotropic fixed vector of a parabolic isometry.
Vector fixed_isotropic_line(const Isometry& g);

}  // namespace cusp
