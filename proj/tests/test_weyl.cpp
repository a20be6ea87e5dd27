#include "doctest.h"

#include "cusp/pipeline.hpp"
#include "fixtures.hpp"

using namespace cusp;

namespace {

struct Blown {
  LooijengaSurface y = fixtures::fiber_surface();
  Sublattice lambda = boundary_complement(y).lattice;
  PeriodPoint phi;
  LooijengaSurface yt = interior_blowup(y, 0);
  PeriodPoint pt;

  explicit Blown(bool trivial = false)
      : phi(trivial ? trivial_period_point(lambda)
                    : solve_period_search(lambda, {{y.anticanonical(), ConstraintKind::equals_zero},
                                                   {fixtures::beta_class(lambda), ConstraintKind::nonzero}})),
        pt(period_after_blowup(phi, y, yt, BoundaryPoint{0, y.history()[0].exceptional, 0})) {}
};

}  // namespace

TEST_CASE("reflect") {
  GramLattice l(Matrix{{-2, 1}, {1, -2}});
  Vector a = make_vector({1, 0});
  CHECK(reflect(l, a, a) == -a);
  GramLattice u(Matrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -2}});
  CHECK(reflect(u, make_vector({0, 0, 1}), make_vector({1, 3, 0})) == make_vector({1, 3, 0}));
  CHECK_THROWS(reflect(u, make_vector({1, 0, 0}), make_vector({1, 0, 0})));

  Blown b;
  WeylCertificate cert = weyl_infiniteness_certificate(pointed_blowup(b.yt, b.pt));
  for (const auto& di : b.yt.boundary()) {
    CHECK(reflect(b.yt.picard(), cert.alpha, di) == di);
    CHECK(reflect(b.yt.picard(), cert.beta, di) == di);
  }
}

TEST_CASE("dihedral order matches matrix powers") {
  struct Case {
    long c;
    std::optional<unsigned long> order;
  };
  for (auto cs : {Case{0, 2}, Case{1, 3}, Case{-1, 3}, Case{2, std::nullopt}, Case{3, std::nullopt}}) {
    GramLattice l(Matrix{{-2, cs.c}, {cs.c, -2}});
    Vector a = make_vector({1, 0}), b = make_vector({0, 1});
    CHECK(dihedral_order(l, a, b) == cs.order);
    Matrix g = reflection(l, a).matrix() * reflection(l, b).matrix();
    Matrix p = Matrix::identity(2);
    unsigned long first = 0;
    for (unsigned long k = 1; k <= 50 && first == 0; ++k) {
      p = p * g;
      if (p.is_identity()) first = k;
    }
    if (cs.order) {
      CHECK(first == *cs.order);
    } else {
      CHECK(first == 0);
    }
    if (cs.c == 2) {
      Matrix n = g - Matrix::identity(2);
      CHECK(n * n == Matrix(2, 2));
    }
  }
}

TEST_CASE("chamber sign vectors") {
  GramLattice l(Matrix{{2, 0, 0}, {0, -2, 0}, {0, 0, -2}});
  std::vector<Vector> roots{make_vector({0, 1, 0}), make_vector({0, 0, 1})};
  CHECK(chamber_sign(l, make_vector({1, 0, 0}), roots) == std::vector<int>{0, 0});
  Vector x = make_vector({3, 1, 1});
  REQUIRE(l.norm(x) > 0);
  std::vector<int> s = chamber_sign(l, x, roots);
  std::vector<int> t = chamber_sign(l, reflect(l, roots[0], x), roots);
  CHECK(t[0] == -s[0]);
  CHECK(t[1] == s[1]);
  CHECK(chamber_sign(l, Integer(5) * x, roots) == s);
  CHECK_THROWS_WITH(chamber_sign(l, make_vector({0, 1, 0}), roots), "not in the positive cone");
}

TEST_CASE("Weyl infiniteness certificate") {
  Blown b;
  PointedBlowup pb = pointed_blowup(b.yt, b.pt);
  WeylCertificate cert = weyl_infiniteness_certificate(pb);
  const GramLattice& pic = b.yt.picard();
  Sublattice m = boundary_complement(b.yt).lattice;
  CHECK(cert.pairing >= 2);
  CHECK_FALSE(cert.order.has_value());
  CHECK(cert.distinct_chambers >= 100);
  for (const Vector& r : {cert.alpha, cert.beta}) {
    CHECK(pic.norm(r) == -2);
    CHECK(m.contains(r));
    for (const auto& di : b.yt.boundary()) CHECK(pic.pair(r, di) == 0);
  }
  // strict transform arithmetic for a section through p
  const GramLattice& ypic = pb.base.surface.picard();
  Vector c = cert.section_a;
  CHECK(ypic.norm(c) == -1);
  CHECK(ypic.pair(c, pb.base.surface.anticanonical()) == 1);
  Vector lifted = pb.lift(c);
  CHECK(pic.pair(lifted, pb.exceptional) == 0);
  CHECK(pic.norm(lifted - pb.exceptional) == -2);
  CHECK(b.pt.evaluate(cert.alpha) == 0);
  CHECK(b.pt.evaluate(cert.beta) == 0);

  CertificateOptions tight{100, 0};
  CHECK_THROWS_WITH(weyl_infiniteness_certificate(pb, tight), doctest::Contains("certificate search exhausted"));
}

TEST_CASE("Weyl certificate with the trivial period point") {
  Blown b(true);
  WeylCertificate cert = weyl_infiniteness_certificate(pointed_blowup(b.yt, b.pt));
  CHECK(cert.pairing >= 2);
  CHECK(cert.distinct_chambers >= 100);
}

TEST_CASE("criterion check") {
  Blown b;
  Certification c = certify(b.yt, b.pt);
  CHECK(c.report.signature_ok);
  CHECK(c.report.rank_ok);
  CHECK(c.report.zmminus1_ok);
  CHECK(c.report.weyl_infinite_ok);
  CHECK(c.report.disjoint_parabolics_ok);
  CHECK(c.report.verdict);
  CHECK(c.report.m == 3);
  CHECK(c.report.failures.empty());

  CriterionReport no_h = totaro_check(c.m, c.g, {}, c.weyl);
  CHECK_FALSE(no_h.disjoint_parabolics_ok);
  CHECK_FALSE(no_h.verdict);

  std::vector<Isometry> more_h = c.h;
  more_h.push_back(c.g[0]);
  CHECK(totaro_check(c.m, c.g, more_h, c.weyl).verdict);

  GramLattice small(Matrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -2}});
  CriterionReport low = totaro_check(Sublattice(small, Matrix::identity(3)), {}, {}, std::nullopt);
  CHECK_FALSE(low.signature_ok);
  CHECK(low.m == 2);
  CHECK_FALSE(low.verdict);
}
