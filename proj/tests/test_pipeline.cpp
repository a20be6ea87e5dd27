#include "doctest.h"

#include "cusp/pipeline.hpp"
#include "fixtures.hpp"

using namespace cusp;

TEST_CASE("verify-paper default run") {
  PipelineReport r = verify_paper();
  CHECK(r.ok());
  CHECK_FALSE(r.failed_stage.has_value());
  std::vector<std::string> names;
  for (const auto& s : r.stages) {
    CHECK_MESSAGE(s.pass, s.name);
    names.push_back(s.name);
  }
  CHECK(names == std::vector<std::string>{"toric_seed", "interior_blowups", "boundary_complement", "period_point",
                                          "genericity", "fibration_pi1", "fibration_trivial_period", "point_p",
                                          "blowup_at_p", "translations_G", "second_fibration", "translations_H",
                                          "weyl_certificate", "criterion"});
  REQUIRE(r.criterion.has_value());
  CHECK(r.criterion->verdict);
  CHECK(format_json(to_json(r)) == format_json(to_json(verify_paper())));
}

TEST_CASE("verify-paper with phi(beta) forced to zero") {
  PipelineConfig c;
  c.force_beta_zero = true;
  PipelineReport r = verify_paper(c);
  CHECK_FALSE(r.ok());
  REQUIRE(r.failed_stage.has_value());
  CHECK(*r.failed_stage == "genericity");
  const Stage& s = r.stages.back();
  CHECK(s.computed["extra_fibers"] == Json::array({"I2"}));
  CHECK(s.computed["mw_rank"] == 1);
}

TEST_CASE("verify-paper with modulus bound 1") {
  PipelineConfig c;
  c.modulus_bound = 1;
  PipelineReport r = verify_paper(c);
  REQUIRE(r.failed_stage.has_value());
  CHECK(*r.failed_stage == "period_point");
  CHECK(r.stages.back().computed["error"] == "no torsion period point satisfies constraints");
}

TEST_CASE("config documents") {
  PipelineConfig c = config_from_json(Json::parse(R"({"modulus_bound": 8, "witness_count": 20, "force_beta_zero": true})"));
  CHECK(c.modulus_bound == 8);
  CHECK(c.witness_count == 20);
  CHECK(c.force_beta_zero);
  CHECK_THROWS_WITH_AS(config_from_json(Json::parse(R"({"modulus": 8})")), "unknown config field 'modulus'", SchemaError);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"witness_count": -1})")), SchemaError);
}

TEST_CASE("json round trips") {
  LooijengaSurface y = fixtures::fiber_surface();
  CHECK(surface_from_json(to_json(y)) == y);
  Json j = to_json(y);
  CHECK(j["history"][0][0] == 1);

  Sublattice lambda = boundary_complement(y).lattice;
  PeriodPoint phi = solve_period_search(lambda, {{y.anticanonical(), ConstraintKind::equals_zero},
                                                 {fixtures::beta_class(lambda), ConstraintKind::nonzero}});
  PeriodPoint back = period_from_json(to_json(phi), y);
  CHECK(back.modulus() == phi.modulus());
  CHECK(back.values() == phi.values());
  CHECK(back.domain().basis() == phi.domain().basis());

  GramLattice u(Matrix{{0, 1}, {1, 0}}, {"e", "f"});
  GramLattice u2 = lattice_from_json(to_json(u));
  CHECK(u2.gram() == u.gram());
  CHECK(u2.labels() == u.labels());
  Isometry swap(u, Matrix{{0, 1}, {1, 0}});
  CHECK(isometry_from_json(to_json(swap), u) == swap);

  Integer big("123456789012345678901234567890");
  CHECK(to_json(big).is_string());
  CHECK(integer_from_json(to_json(big), "x") == big);
  CHECK(to_json(Integer(-5)) == -5);
}

TEST_CASE("schema errors name the field") {
  LooijengaSurface y = fixtures::fiber_surface();
  Json j = to_json(y);

  Json missing = j;
  missing.erase("picard");
  CHECK_THROWS_WITH_AS(surface_from_json(missing), "missing field 'picard'", SchemaError);

  Json bad_gram = j;
  bad_gram["picard"]["gram"] = "x";
  CHECK_THROWS_WITH_AS(surface_from_json(bad_gram), doctest::Contains("picard.gram"), SchemaError);

  Json bad_entry = j;
  bad_entry["boundary"][2][1] = 1.5;
  CHECK_THROWS_WITH_AS(surface_from_json(bad_entry), doctest::Contains("boundary[2][1]"), SchemaError);

  Json bad_history = j;
  bad_history["history"][0][0] = 9;
  CHECK_THROWS_WITH_AS(surface_from_json(bad_history), doctest::Contains("history[0][0]"), SchemaError);

  Json no_modulus = Json::parse(R"({"values": [1, 0, 1], "domain_basis": []})");
  CHECK_THROWS_WITH_AS(period_from_json(no_modulus, y), "missing field 'modulus'", SchemaError);
}
