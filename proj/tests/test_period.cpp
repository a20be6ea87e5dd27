#include "doctest.h"

#include <random>

#include "cusp/period.hpp"
#include "fixtures.hpp"

using namespace cusp;

namespace {

struct FiberLambda {
  LooijengaSurface y = fixtures::fiber_surface();
  Sublattice lambda = boundary_complement(y).lattice;
  Vector d = y.anticanonical();
  Vector beta = fixtures::beta_class(lambda);
};

// Every homomorphism Z^rank -> Z/m, by its values on the basis.
template <typename F>
void for_each_homomorphism(std::size_t rank, long m, F&& f) {
  std::vector<long> v(rank, 0);
  while (true) {
    f(v);
    std::size_t i = 0;
    while (i < rank && ++v[i] == m) v[i++] = 0;
    if (i == rank) return;
  }
}

Integer value_on(const std::vector<long>& values, const Vector& coords, long m) {
  Integer s = 0;
  for (std::size_t i = 0; i < values.size(); ++i) s += values[i] * coords[i];
  return mod(s, Integer(m));
}

}  // namespace

TEST_CASE("solve period agrees with exhaustive search") {
  FiberLambda p;
  Vector dc = *p.lambda.coordinates(p.d), bc = *p.lambda.coordinates(p.beta);
  std::vector<PeriodConstraint> cons{{p.d, ConstraintKind::equals_zero}, {p.beta, ConstraintKind::nonzero}};
  long smallest = 0;
  for (long m = 1; m <= 8; ++m) {
    bool feasible = false;
    for_each_homomorphism(p.lambda.rank(), m, [&](const std::vector<long>& v) {
      if (value_on(v, dc, m) == 0 && value_on(v, bc, m) != 0) feasible = true;
    });
    auto phi = solve_period(p.lambda, cons, m);
    CHECK(phi.has_value() == feasible);
    if (phi) CHECK(satisfies(*phi, cons));
    if (feasible && smallest == 0) smallest = m;
  }
  PeriodPoint phi = solve_period_search(p.lambda, cons);
  CHECK(phi.modulus() == smallest);
  CHECK(smallest == 2);
  CHECK(phi.evaluate(p.beta) == 1);
  CHECK(phi.evaluate(p.d) == 0);
}

TEST_CASE("solve period errors and the trivial point") {
  FiberLambda p;
  std::vector<PeriodConstraint> bad{{p.beta, ConstraintKind::equals_zero}, {p.beta, ConstraintKind::nonzero}};
  CHECK_THROWS_WITH_AS(solve_period_search(p.lambda, bad, 16), "no torsion period point satisfies constraints",
                       std::domain_error);
  auto triv = solve_period(p.lambda, {}, 1);
  REQUIRE(triv.has_value());
  CHECK(triv->values() == Vector(p.lambda.rank(), 0));
  std::vector<PeriodConstraint> cons{{p.d, ConstraintKind::equals_zero}, {p.beta, ConstraintKind::nonzero}};
  CHECK_THROWS(solve_period_search(p.lambda, cons, 1));
}

TEST_CASE("evaluate") {
  FiberLambda p;
  PeriodPoint phi = solve_period_search(p.lambda, {{p.d, ConstraintKind::equals_zero}, {p.beta, ConstraintKind::nonzero}});
  CHECK(phi.evaluate(Vector(p.y.picard_rank(), 0)) == 0);
  for (long k = -3; k <= 5; ++k) {
    CHECK(phi.evaluate(p.beta + Integer(k) * p.d) == phi.evaluate(p.beta));
    CHECK(phi.evaluate(-p.beta + Integer(k) * p.d) == mod(-phi.evaluate(p.beta), phi.modulus()));
  }
  CHECK_THROWS_WITH(phi.evaluate(p.y.history()[0].exceptional), "class does not restrict trivially to the boundary");

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-9, 9);
  for (int t = 0; t < 50; ++t) {
    Vector a(p.lambda.rank()), b(p.lambda.rank());
    for (auto& x : a) x = dist(rng);
    for (auto& x : b) x = dist(rng);
    Vector u = p.lambda.to_ambient(a), v = p.lambda.to_ambient(b);
    CHECK(phi.evaluate(u + v) == mod(phi.evaluate(u) + phi.evaluate(v), phi.modulus()));
  }
}

TEST_CASE("genericity on an affine A1 lattice") {
  // basis beta, F with beta^2 = -2 and F in the radical
  GramLattice l(Matrix{{-2, 0}, {0, 0}});
  Sublattice all(l, Matrix::identity(2));
  ShortVectors roots = vectors_of_square(l, -2);
  REQUIRE(roots.representatives.size() == 2);

  auto generic_by_cosets = [&](long m, long vb, long vf) {
    for (long k = 0; k < m; ++k)
      if ((vb + k * vf) % m == 0 || ((-vb + k * vf) % m + m) % m == 0) return false;
    return true;
  };
  struct Case {
    long m, vb, vf;
  };
  for (auto c : {Case{2, 1, 0}, Case{2, 0, 0}, Case{4, 1, 2}, Case{4, 2, 2}, Case{6, 2, 3}, Case{5, 1, 0}}) {
    PeriodPoint phi(all, c.m, make_vector({c.vb, c.vf}));
    CHECK(is_generic(phi, roots) == generic_by_cosets(c.m, c.vb, c.vf));
    // pushing forward along Z/m -> Z/3m keeps genericity
    PeriodPoint wider(all, 3 * c.m, make_vector({3 * c.vb, 3 * c.vf}));
    CHECK(is_generic(wider, roots) == is_generic(phi, roots));
  }
  CHECK(is_generic(PeriodPoint(all, 4, make_vector({1, 2})), roots));
  CHECK_FALSE(is_generic(PeriodPoint(all, 2, make_vector({0, 1})), roots));
}

TEST_CASE("section residue bound") {
  GramLattice l(Matrix{{-2, 0}, {0, 0}});
  Sublattice all(l, Matrix::identity(2));
  CHECK(section_residue_bound(PeriodPoint(all, 2, make_vector({1, 0}))) == 2);
  CHECK(section_residue_bound(trivial_period_point(all)) == 1);
  CHECK(section_residue_bound(PeriodPoint(all, 6, make_vector({2, 4}))) == 3);
}

TEST_CASE("period point after blow-up and blow-down") {
  FiberLambda p;
  PeriodPoint phi = solve_period_search(p.lambda, {{p.d, ConstraintKind::equals_zero}, {p.beta, ConstraintKind::nonzero}});
  const Vector ref = p.y.history()[0].exceptional;
  LooijengaSurface yt = interior_blowup(p.y, 0);
  auto lift = [](Vector v) {
    v.push_back(0);
    return v;
  };
  Vector ep = yt.history().back().exceptional;
  for (long offset : {0, 1}) {
    PeriodPoint pt = period_after_blowup(phi, p.y, yt, BoundaryPoint{0, ref, offset});
    CHECK(pt.domain().rank() == 4);
    CHECK(pt.evaluate(lift(p.beta)) == phi.evaluate(p.beta));
    CHECK(pt.evaluate(lift(p.d)) == 0);
    CHECK(pt.evaluate(lift(ref) - ep) == mod(Integer(-offset), phi.modulus()));
    BlowDown bd = blow_down_with_embedding(yt, ep);
    PeriodPoint back = period_after_blowdown(pt, bd);
    CHECK(back.evaluate(bd.surface.anticanonical()) == 0);
    CHECK(is_generic(back, vectors_of_square(back.domain().as_lattice(), -2)));
  }
}
