#include "cusp/fibration.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cusp/normal_form.hpp"

namespace cusp {
namespace {

bool connected(const Matrix& gram) {
  const std::size_t n = gram.rows();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j)
      if (!seen[j] && i != j && gram(i, j) != 0) {
        seen[j] = true;
        stack.push_back(j);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool lex_positive(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return x > 0;
  return false;
}

}  // namespace

FiberConfiguration classify_configuration(const GramLattice& l, const std::vector<Vector>& classes) {
  if (classes.empty()) throw std::invalid_argument("empty fiber configuration");
  const std::size_t n = classes.size();
  Matrix g = gram_of(l, classes);
  for (std::size_t i = 0; i < n; ++i) {
    if (g(i, i) != -2) throw std::invalid_argument("fiber components must have square -2");
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && g(i, j) < 0) throw std::invalid_argument("fiber components must pair nonnegatively");
  }
  if (!connected(g)) throw std::invalid_argument("fiber configuration is disconnected");
  Definiteness d = classify_definiteness(signature_of(g));
  if (d == Definiteness::negative_definite)
    throw std::invalid_argument("not a full fiber: configuration is negative definite");
  if (d != Definiteness::negative_semidefinite_degenerate)
    throw std::invalid_argument("not a fiber configuration: form is not negative semidefinite");
  Matrix rad = left_kernel(g);
  if (rad.rows() != 1) throw std::invalid_argument("not a fiber configuration: radical has rank > 1");
  Vector mult = primitive_normalized(rad.row(0));
  if (std::any_of(mult.begin(), mult.end(), [](const Integer& x) { return x <= 0; }))
    throw std::invalid_argument("not a fiber configuration: multiplicities are not positive");

  FiberConfiguration f{classes, mult, ""};
  Vector total = zero_vector(l.rank());
  for (std::size_t i = 0; i < n; ++i) total = total + mult[i] * classes[i];
  if (l.norm(total) != 0) throw std::logic_error("weighted fiber sum is not isotropic");
  for (const auto& c : classes)
    if (l.pair(total, c) != 0) throw std::logic_error("weighted fiber sum is not orthogonal to a component");

  const Integer top = *std::max_element(mult.begin(), mult.end());
  if (n == 2) {
    f.kodaira_type = "I2";
  } else if (top == 1) {
    f.kodaira_type = "I" + std::to_string(n);
  } else if (top == 2) {
    f.kodaira_type = "I" + std::to_string(n - 5) + "*";
  } else if (top == 3) {
    f.kodaira_type = "IV*";
  } else if (top == 4) {
    f.kodaira_type = "III*";
  } else {
    f.kodaira_type = "II*";
  }
  return f;
}

EllipticFibration fiber_from_boundary(const LooijengaSurface& s, const PeriodPoint& phi) {
  for (long a : s.self_intersections())
    if (a != -2) throw std::invalid_argument("boundary is not of fiber type");
  const Vector d = s.anticanonical();
  if (!phi.domain().contains(d)) throw std::logic_error("anticanonical cycle is not orthogonal to the boundary");
  EllipticFibration fib;
  fib.multiplicity = phi.order_of(phi.evaluate(d));
  fib.fiber = fib.multiplicity * d;
  fib.has_section = fib.multiplicity == 1;
  if (fib.has_section && !s.history().empty()) fib.zero_section = s.history().back().exceptional;
  fib.reducible_fibers.push_back(classify_configuration(s.picard(), s.boundary()));
  return fib;
}

long shioda_tate_rank(long rho, const std::vector<FiberConfiguration>& fibers) {
  if (rho < 2) throw std::invalid_argument("Shioda-Tate needs rho >= 2");
  long r = rho - 2;
  for (const auto& f : fibers) r -= static_cast<long>(f.components()) - 1;
  if (r < 0) throw std::domain_error("inconsistent fiber data: more components than the lattice permits");
  return r;
}

std::vector<FiberConfiguration> extra_reducible_fibers(const Sublattice& lambda, const Vector& fiber,
                                                       const ShortVectors& roots, const PeriodPoint& phi) {
  std::vector<FiberConfiguration> out;
  if (roots.representatives.empty()) return out;
  if (roots.radical.rows() != 1) throw std::invalid_argument("extra fibers need a rank-one radical");
  const GramLattice& amb = lambda.ambient();
  const Matrix& lg = lambda.induced_gram();

  // radical generator oriented so that F is a positive multiple of it
  Vector r = roots.radical.row(0);
  Vector rad_ambient = lambda.to_ambient(r);
  auto fiber_coords = lambda.coordinates(fiber);
  if (!fiber_coords) throw std::invalid_argument("fiber class is not in Lambda");
  std::optional<Integer> ratio;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] != 0) {
      ratio = (*fiber_coords)[i] / r[i];
      break;
    }
  if (!ratio || (*ratio) * r != *fiber_coords) throw std::invalid_argument("fiber class is not in the radical");
  if (*ratio < 0) {
    r = -r;
    rad_ambient = -rad_ambient;
  }
  const Integer step = phi.evaluate_coordinates(r);
  const Integer step_order = phi.order_of(step);

  // vanishing lift of a root class: smallest k >= 0 with phi(v + k r) = 0
  auto lift = [&](const Vector& v) -> std::optional<Vector> {
    for (Integer k = 0; k < step_order; k += 1)
      if (phi.evaluate_coordinates(v + k * r) == 0) return v + k * r;
    return std::nullopt;
  };

  // positive roots of the vanishing subsystem, ordered by the pairing vector
  // (a linear functional that is injective on Lambda / radical)
  struct Root {
    Vector coords;  // vanishing lift in Lambda coordinates
    Vector key;     // Gram row, identifies the class modulo the radical
  };
  std::vector<Root> positive;
  for (const auto& rep : roots.representatives) {
    Vector key = lg * rep;
    if (!lex_positive(key)) continue;
    if (auto l = lift(rep)) positive.push_back({*l, key});
  }
  if (positive.empty()) return out;

  std::map<Vector, std::size_t> by_key;
  for (std::size_t i = 0; i < positive.size(); ++i) by_key[positive[i].key] = i;
  std::vector<std::size_t> simple;
  for (std::size_t i = 0; i < positive.size(); ++i) {
    bool decomposable = false;
    for (std::size_t j = 0; j < positive.size() && !decomposable; ++j) {
      Vector rest = positive[i].key - positive[j].key;
      decomposable = by_key.count(rest) > 0;
    }
    if (!decomposable) simple.push_back(i);
  }

  auto pair = [&](const Vector& a, const Vector& b) { return dot(a, lg * b); };

  // connected components of the simple roots
  std::vector<int> comp(simple.size(), -1);
  int ncomp = 0;
  for (std::size_t s0 = 0; s0 < simple.size(); ++s0) {
    if (comp[s0] >= 0) continue;
    std::vector<std::size_t> stack{s0};
    comp[s0] = ncomp;
    while (!stack.empty()) {
      std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < simple.size(); ++b)
        if (comp[b] < 0 && pair(positive[simple[a]].coords, positive[simple[b]].coords) != 0) {
          comp[b] = ncomp;
          stack.push_back(b);
        }
    }
    ++ncomp;
  }

  for (int c = 0; c < ncomp; ++c) {
    std::vector<Vector> simples;
    for (std::size_t k = 0; k < simple.size(); ++k)
      if (comp[k] == c) simples.push_back(positive[simple[k]].coords);
    // highest root: the dominant positive root supported on this component
    std::optional<Vector> highest;
    for (const auto& p : positive) {
      bool in_component = false, dominant = true, orthogonal_elsewhere = true;
      for (std::size_t k = 0; k < simple.size(); ++k) {
        Integer x = pair(p.coords, positive[simple[k]].coords);
        if (comp[k] == c) {
          in_component |= x != 0;
          dominant &= x <= 0;
        } else {
          orthogonal_elsewhere &= x == 0;
        }
      }
      if (in_component && dominant && orthogonal_elsewhere) {
        highest = p.coords;
        break;
      }
    }
    if (!highest) throw std::logic_error("root subsystem has no highest root");
    // express the highest root through the chosen simple lifts so the weighted fiber sum is exactly F
    Matrix sg = gram_of(lambda.as_lattice(), simples);
    Vector rhs(simples.size());
    for (std::size_t k = 0; k < simples.size(); ++k) rhs[k] = pair(*highest, simples[k]);
    auto coeffs = solve_left(sg, rhs);
    if (!coeffs) throw std::logic_error("highest root is not an integral combination of simple roots");
    Vector theta = zero_vector(r.size());
    for (std::size_t k = 0; k < simples.size(); ++k) theta = theta + (*coeffs)[k] * simples[k];

    std::vector<Vector> classes;
    classes.push_back(fiber - lambda.to_ambient(theta));
    for (const auto& sroot : simples) classes.push_back(lambda.to_ambient(sroot));
    out.push_back(classify_configuration(amb, classes));
  }
  return out;
}

EllipticFibration analyze_fibration(const LooijengaSurface& s, const PeriodPoint& phi) {
  EllipticFibration fib = fiber_from_boundary(s, phi);
  const Sublattice& lambda = phi.domain();
  ShortVectors roots = vectors_of_square(lambda.as_lattice(), -2);
  for (auto& f : extra_reducible_fibers(lambda, fib.fiber, roots, phi)) fib.reducible_fibers.push_back(std::move(f));
  fib.mw_rank = shioda_tate_rank(static_cast<long>(s.picard_rank()), fib.reducible_fibers);
  return fib;
}

Isometry eichler_transvection(const GramLattice& l, const Vector& f, const Vector& e) {
  if (l.norm(f) != 0) throw std::invalid_argument("transvection: fiber class is not isotropic");
  if (l.pair(e, f) != 0) throw std::invalid_argument("transvection: direction is not orthogonal to the fiber");
  Integer ee = l.norm(e);
  if (ee % 2 != 0) throw std::invalid_argument("transvection: direction has odd square");
  const std::size_t n = l.rank();
  Vector gf = l.pairing_row(f), ge = l.pairing_row(e);
  Integer half = ee / 2;
  Matrix m = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) += e[i] * gf[j] - f[i] * ge[j] - half * f[i] * gf[j];
  return Isometry(l, m);
}

TranslationGroup mw_translation_group(const LooijengaSurface& s, const EllipticFibration& fib,
                                      const PeriodPoint* fixing) {
  TranslationGroup group{fib.fiber, {}, {}};
  if (!fib.mw_rank) throw std::invalid_argument("fibration has no Mordell-Weil rank yet");
  if (*fib.mw_rank == 0) return group;

  Sublattice lambda = boundary_complement(s).lattice;
  const std::size_t n = lambda.rank();

  // directions allowed by the period point: its kernel, full rank in Lambda
  Matrix allowed = Matrix::identity(n);
  if (fixing) {
    if (fixing->domain().basis() != lambda.basis()) throw std::invalid_argument("period point is not on Lambda(Y,D)");
    Matrix eq(n + 1, 1);
    for (std::size_t i = 0; i < n; ++i) eq(i, 0) = fixing->values()[i];
    eq(n, 0) = fixing->modulus();
    Matrix sol = left_kernel(eq);
    Matrix proj(sol.rows(), n);
    for (std::size_t i = 0; i < sol.rows(); ++i)
      for (std::size_t j = 0; j < n; ++j) proj(i, j) = sol(i, j);
    allowed = row_lattice_basis(proj);
  }
  // orthogonal to every component of the extra reducible fibers
  std::vector<Vector> extra;
  for (std::size_t k = 1; k < fib.reducible_fibers.size(); ++k)
    for (const auto& c : fib.reducible_fibers[k].classes) extra.push_back(c);
  if (!extra.empty()) {
    Matrix pairings(allowed.rows(), extra.size());
    for (std::size_t i = 0; i < allowed.rows(); ++i) {
      Vector amb = lambda.to_ambient(allowed.row(i));
      for (std::size_t j = 0; j < extra.size(); ++j) pairings(i, j) = s.picard().pair(amb, extra[j]);
    }
    allowed = left_kernel(pairings) * allowed;
  }

  // modulo the fiber line: complement of the radical inside `allowed`
  Matrix form = allowed * lambda.induced_gram() * allowed.transpose();
  Matrix rad = left_kernel(form);
  Matrix comp = complement_basis(rad, allowed.rows()) * allowed;
  Matrix lambda_radical = left_kernel(lambda.induced_gram());
  if (static_cast<long>(comp.rows()) != *fib.mw_rank)
    throw std::logic_error("translation directions do not match the Mordell-Weil rank");
  for (std::size_t i = 0; i < comp.rows(); ++i) {
    Vector e = lambda.to_ambient(reduce_modulo(comp.row(i), lambda_radical));
    group.directions.push_back(e);
    group.generators.push_back(eichler_transvection(s.picard(), fib.fiber, e));
  }
  return group;
}

Vector fixed_isotropic_line(const Isometry& g) {
  IsometryType t = classify_isometry(g);
  if (t.kind != IsometryKind::parabolic) throw std::domain_error("isometry is not parabolic");
  return *t.fixed_isotropic;
}

}  // namespace cusp
