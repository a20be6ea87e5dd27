#include "cusp/period.hpp"

#include <stdexcept>

#include "cusp/normal_form.hpp"

namespace cusp {

PeriodPoint::PeriodPoint(Sublattice domain, Integer modulus, Vector values)
    : domain_(std::move(domain)), modulus_(std::move(modulus)), values_(std::move(values)) {
  if (modulus_ < 1) throw std::invalid_argument("period modulus must be positive");
  if (values_.size() != domain_.rank()) throw std::invalid_argument("period values do not match the domain rank");
  for (auto& v : values_) v = mod(v, modulus_);
}

Integer PeriodPoint::evaluate(const Vector& ambient_class) const {
  auto coords = domain_.coordinates(ambient_class);
  if (!coords) throw std::invalid_argument("class does not restrict trivially to the boundary");
  return evaluate_coordinates(*coords);
}

Integer PeriodPoint::evaluate_coordinates(const Vector& coords) const { return mod(dot(coords, values_), modulus_); }

Integer PeriodPoint::order_of(const Integer& residue) const { return modulus_ / gcd(mod(residue, modulus_), modulus_); }

PeriodPoint trivial_period_point(const Sublattice& domain) {
  return PeriodPoint(domain, 1, zero_vector(domain.rank()));
}

bool satisfies(const PeriodPoint& phi, const std::vector<PeriodConstraint>& constraints) {
  for (const auto& c : constraints) {
    bool zero = phi.evaluate(c.target) == 0;
    if (zero != (c.kind == ConstraintKind::equals_zero)) return false;
  }
  return true;
}

std::optional<PeriodPoint> solve_period(const Sublattice& domain, const std::vector<PeriodConstraint>& constraints,
                                        const Integer& modulus) {
  if (modulus < 1) throw std::invalid_argument("period modulus must be positive");
  const std::size_t n = domain.rank();
  std::vector<Vector> zero_rows, nonzero_rows;
  for (const auto& c : constraints) {
    auto coords = domain.coordinates(c.target);
    if (!coords) throw std::invalid_argument("constraint class does not restrict trivially to the boundary");
    (c.kind == ConstraintKind::equals_zero ? zero_rows : nonzero_rows).push_back(*coords);
  }

  // A x = 0 (mod m) with A = U^{-1} S V^{-1}: solutions are x = V y with s_i y_i = 0 (mod m).
  Matrix a = Matrix::from_rows(zero_rows, n);
  SmithForm snf = smith_form(a);
  std::vector<Vector> generators;
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < n; ++i) {
    Integer step = 1;
    if (i < snf.rank) step = modulus / gcd(snf.diagonal(i, i), modulus);
    Integer order = modulus / step;
    if (order == 1) continue;
    Vector g = snf.right.col(i);
    for (auto& x : g) x = mod(step * x, modulus);
    generators.push_back(g);
    orders.push_back(order);
  }

  Integer space = 1;
  for (const auto& o : orders) space *= o;
  if (space > Integer(1) << 24) throw std::domain_error("period search space too large");

  std::vector<Integer> counter(generators.size(), Integer(0));
  while (true) {
    Vector x = zero_vector(n);
    for (std::size_t k = 0; k < generators.size(); ++k) x = x + counter[k] * generators[k];
    bool ok = true;
    for (const auto& row : nonzero_rows)
      if (mod(dot(row, x), modulus) == 0) {
        ok = false;
        break;
      }
    if (ok) {
      PeriodPoint phi(domain, modulus, x);
      if (!satisfies(phi, constraints)) throw std::logic_error("period solution violates its constraints");
      return phi;
    }
    // mixed-radix increment, last generator fastest
    std::size_t k = generators.size();
    while (k > 0) {
      --k;
      counter[k] += 1;
      if (counter[k] < orders[k]) break;
      counter[k] = 0;
      if (k == 0) return std::nullopt;
    }
    if (generators.empty()) return std::nullopt;
  }
}

PeriodPoint solve_period_search(const Sublattice& domain, const std::vector<PeriodConstraint>& constraints,
                                unsigned long bound) {
  for (unsigned long m = 1; m <= bound; ++m)
    if (auto phi = solve_period(domain, constraints, Integer(m))) return *phi;
  throw std::domain_error("no torsion period point satisfies constraints");
}

bool coset_vanishes(const PeriodPoint& phi, const Vector& rep, const Matrix& radical) {
  if (rep.size() != phi.domain().rank()) throw std::invalid_argument("root not in domain");
  // phi(rep) + span{phi(r_j)} contains 0 iff gcd(phi(r_j), m) divides phi(rep)
  Integer g = phi.modulus();
  for (std::size_t j = 0; j < radical.rows(); ++j) g = gcd(g, phi.evaluate_coordinates(radical.row(j)));
  return phi.evaluate_coordinates(rep) % g == 0;
}

bool is_generic(const PeriodPoint& phi, const ShortVectors& roots) {
  for (const auto& rep : roots.representatives)
    if (coset_vanishes(phi, rep, roots.radical)) return false;
  return true;
}

Integer section_residue_bound(const PeriodPoint& phi) {
  Integer g = phi.modulus();
  for (const auto& v : phi.values()) g = gcd(g, v);
  return phi.modulus() / g;
}

PeriodPoint period_after_blowup(const PeriodPoint& base_period, const LooijengaSurface& base,
                                const LooijengaSurface& blown, const BoundaryPoint& point) {
  const std::size_t n = base.picard_rank();
  if (blown.picard_rank() != n + 1 || blown.history().empty() || blown.history().back().component != point.component)
    throw std::invalid_argument("surface is not the blow-up of the base at the given component");
  const GramLattice& pic = base.picard();
  for (std::size_t j = 0; j < base.cycle_length(); ++j) {
    Integer expected = (j == point.component) ? 1 : 0;
    if (pic.pair(point.reference, base.boundary()[j]) != expected)
      throw std::invalid_argument("reference class does not meet only the chosen component");
  }

  Sublattice domain = boundary_complement(blown).lattice;
  Vector values(domain.rank());
  for (std::size_t b = 0; b < domain.rank(); ++b) {
    Vector w = domain.basis().row(b);
    Integer k = w[n];  // coefficient of the new exceptional class
    Vector x(w.begin(), w.begin() + n);
    // w = x + k E_p restricts like x + k C0 twisted by O(k (p - p0))
    values[b] = base_period.evaluate(x + k * point.reference) + k * point.offset;
  }
  return PeriodPoint(domain, base_period.modulus(), values);
}

PeriodPoint period_after_blowdown(const PeriodPoint& period, const BlowDown& contraction) {
  Sublattice domain = boundary_complement(contraction.surface).lattice;
  Vector values(domain.rank());
  for (std::size_t b = 0; b < domain.rank(); ++b)
    values[b] = period.evaluate(domain.basis().row(b) * contraction.embedding);
  return PeriodPoint(domain, period.modulus(), values);
}

}  // namespace cusp
