#include "doctest.h"

#include <random>

#include "cusp/fibration.hpp"
#include "fixtures.hpp"

using namespace cusp;

namespace {

struct FiberSetup {
  LooijengaSurface y = fixtures::fiber_surface();
  Sublattice lambda = boundary_complement(y).lattice;
  Vector d = y.anticanonical();
  Vector beta = fixtures::beta_class(lambda);
  PeriodPoint phi = solve_period_search(lambda, {{d, ConstraintKind::equals_zero}, {beta, ConstraintKind::nonzero}});
};

std::vector<Vector> units(std::size_t n) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vector(n, i));
  return out;
}

// Gram of a graph of (-2)-nodes with single edges.
Matrix dynkin(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = -2;
  for (auto [a, b] : edges) g(a, b) = g(b, a) = 1;
  return g;
}

}  // namespace

TEST_CASE("fiber from boundary") {
  FiberSetup p;
  EllipticFibration f = fiber_from_boundary(p.y, p.phi);
  CHECK(f.multiplicity == 1);
  CHECK(f.fiber == p.d);
  CHECK(f.has_section);
  REQUIRE(f.zero_section.has_value());
  CHECK(*f.zero_section == p.y.history().back().exceptional);
  CHECK(p.y.picard().pair(*f.zero_section, f.fiber) == 1);
  REQUIRE(f.reducible_fibers.size() == 1);
  CHECK(f.reducible_fibers[0].kodaira_type == "I7");
  CHECK(p.y.picard().norm(f.fiber) == 0);

  // a period point with phi(D) of order 2 gives a double fiber and no section
  auto phi2 = solve_period(p.lambda, {{p.d, ConstraintKind::nonzero}}, 2);
  REQUIRE(phi2.has_value());
  EllipticFibration g = fiber_from_boundary(p.y, *phi2);
  CHECK(g.multiplicity == 2);
  CHECK(g.fiber == Integer(2) * p.d);
  CHECK_FALSE(g.has_section);
  CHECK_FALSE(g.zero_section.has_value());

  LooijengaSurface yt = interior_blowup(p.y, 0);
  CHECK_THROWS_WITH(fiber_from_boundary(yt, trivial_period_point(boundary_complement(yt).lattice)),
                    "boundary is not of fiber type");
}

TEST_CASE("classify configuration") {
  FiberSetup p;
  FiberConfiguration i7 = classify_configuration(p.y.picard(), p.y.boundary());
  CHECK(i7.kodaira_type == "I7");
  CHECK(i7.components() == 7);
  CHECK(i7.multiplicities == Vector(7, 1));

  GramLattice a1(Matrix{{-2, 2}, {2, -2}});
  FiberConfiguration i2 = classify_configuration(a1, units(2));
  CHECK(i2.kodaira_type == "I2");
  CHECK(i2.components() == 2);

  GramLattice d4(dynkin(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
  FiberConfiguration istar = classify_configuration(d4, units(5));
  CHECK(istar.kodaira_type == "I0*");
  CHECK(istar.multiplicities == make_vector({2, 1, 1, 1, 1}));

  GramLattice d6(dynkin(7, {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}}));
  CHECK(classify_configuration(d6, units(7)).kodaira_type == "I2*");

  GramLattice e6(dynkin(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}}));
  FiberConfiguration iv = classify_configuration(e6, units(7));
  CHECK(iv.kodaira_type == "IV*");
  CHECK(iv.multiplicities == make_vector({1, 2, 3, 2, 1, 2, 1}));

  GramLattice e8(dynkin(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}}));
  CHECK(classify_configuration(e8, units(9)).kodaira_type == "II*");

  GramLattice single(Matrix{{-2}});
  CHECK_THROWS_WITH(classify_configuration(single, units(1)), doctest::Contains("not a full fiber"));
  GramLattice a2(dynkin(2, {{0, 1}}));
  CHECK_THROWS_WITH(classify_configuration(a2, units(2)), doctest::Contains("not a full fiber"));
  GramLattice split(Matrix{{-2, 2, 0, 0}, {2, -2, 0, 0}, {0, 0, -2, 2}, {0, 0, 2, -2}});
  CHECK_THROWS_WITH(classify_configuration(split, units(4)), doctest::Contains("disconnected"));
}

TEST_CASE("Shioda-Tate") {
  FiberSetup p;
  FiberConfiguration i7 = classify_configuration(p.y.picard(), p.y.boundary());
  FiberConfiguration i2 = classify_configuration(GramLattice(Matrix{{-2, 2}, {2, -2}}), units(2));
  CHECK(shioda_tate_rank(10, {i7}) == 2);
  CHECK(shioda_tate_rank(10, {i7, i2}) == 1);
  CHECK(shioda_tate_rank(2, {}) == 0);
  CHECK_THROWS_WITH(shioda_tate_rank(5, {i7}), doctest::Contains("inconsistent fiber data"));
  for (long rho = 9; rho <= 12; ++rho) {
    long r = shioda_tate_rank(rho, {i7, i2});
    CHECK(r + 2 + 6 + 1 == rho);
  }
}

TEST_CASE("extra reducible fibers") {
  FiberSetup p;
  ShortVectors roots = vectors_of_square(p.lambda.as_lattice(), -2);
  CHECK(extra_reducible_fibers(p.lambda, p.d, roots, p.phi).empty());

  PeriodPoint triv = trivial_period_point(p.lambda);
  auto extra = extra_reducible_fibers(p.lambda, p.d, roots, triv);
  REQUIRE(extra.size() == 1);
  CHECK(extra[0].kodaira_type == "I2");
  REQUIRE(extra[0].classes.size() == 2);
  const Vector& a = extra[0].classes[0];
  const Vector& b = extra[0].classes[1];
  CHECK(a + b == p.d);
  // both are of the form +-beta + kF
  for (const Vector& c : {a, b}) {
    bool found = false;
    for (long k = -3; k <= 3 && !found; ++k)
      found = c == p.beta + Integer(k) * p.d || c == -p.beta + Integer(k) * p.d;
    CHECK(found);
  }
  CHECK(extra_reducible_fibers(p.lambda, p.d, ShortVectors{roots.radical, {}}, triv).empty());

  CHECK(*analyze_fibration(p.y, p.phi).mw_rank == 2);
  CHECK(*analyze_fibration(p.y, triv).mw_rank == 1);
}

TEST_CASE("Eichler transvections") {
  GramLattice l(Matrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -2}});
  Vector f = make_vector({1, 0, 0}), e = make_vector({0, 0, 1});
  CHECK(eichler_transvection(l, f, f).matrix().is_identity());
  Isometry t = eichler_transvection(l, f, e);
  CHECK(t.apply(f) == f);
  IsometryType ty = classify_isometry(t);
  CHECK(ty.kind == IsometryKind::parabolic);
  CHECK(*ty.fixed_isotropic == f);
  Matrix pw = Matrix::identity(3);
  for (int k = 1; k <= 12; ++k) {
    pw = pw * t.matrix();
    CHECK_FALSE(pw.is_identity());
  }
  CHECK_THROWS(eichler_transvection(l, make_vector({1, 1, 0}), e));
  CHECK_THROWS(eichler_transvection(l, f, make_vector({0, 1, 0})));
  GramLattice odd(Matrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -1}});
  CHECK_THROWS(eichler_transvection(odd, f, e));
}

TEST_CASE("Eichler transvections compose additively") {
  FiberSetup p;
  const GramLattice& pic = p.y.picard();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> dist(-3, 3);
  for (int t = 0; t < 20; ++t) {
    Vector a(3), b(3);
    for (auto& x : a) x = dist(rng);
    for (auto& x : b) x = dist(rng);
    Vector e1 = p.lambda.to_ambient(a), e2 = p.lambda.to_ambient(b);
    Isometry lhs = eichler_transvection(pic, p.d, e1).compose(eichler_transvection(pic, p.d, e2));
    CHECK(lhs == eichler_transvection(pic, p.d, e1 + e2));
    // fixes every boundary class
    for (const auto& di : p.y.boundary()) CHECK(lhs.apply(di) == di);
  }
}

TEST_CASE("Mordell-Weil translations") {
  FiberSetup p;
  EllipticFibration f = analyze_fibration(p.y, p.phi);
  TranslationGroup g = mw_translation_group(p.y, f);
  REQUIRE(g.generators.size() == 2);
  for (const auto& x : g.generators) {
    IsometryType ty = classify_isometry(x);
    CHECK(ty.kind == IsometryKind::parabolic);
    CHECK(*ty.fixed_isotropic == primitive_normalized(p.d));
  }
  CHECK(commute(g.generators[0], g.generators[1]));

  TranslationGroup fixing = mw_translation_group(p.y, f, &p.phi);
  REQUIRE(fixing.directions.size() == 2);
  for (const auto& e : fixing.directions) CHECK(p.phi.evaluate(e) == 0);

  EllipticFibration ft = analyze_fibration(p.y, trivial_period_point(p.lambda));
  TranslationGroup gt = mw_translation_group(p.y, ft);
  REQUIRE(gt.generators.size() == 1);
  for (const auto& c : ft.reducible_fibers[1].classes) CHECK(p.y.picard().pair(gt.directions[0], c) == 0);

  EllipticFibration none = f;
  none.mw_rank = 0;
  CHECK(mw_translation_group(p.y, none).generators.empty());
}

TEST_CASE("fixed isotropic line") {
  GramLattice l(Matrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -2}});
  Vector f = make_vector({1, 0, 0});
  CHECK(fixed_isotropic_line(eichler_transvection(l, f, make_vector({0, 0, 1}))) == f);
  CHECK(fixed_isotropic_line(eichler_transvection(l, -f, make_vector({0, 0, 1}))) == f);
  CHECK_THROWS(fixed_isotropic_line(Isometry::identity(l)));
}
