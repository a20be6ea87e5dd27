#include "doctest.h"

#include "properties.hpp"

namespace {
void check(const props::Result& r) {
  INFO(r.name, " seed ", props::seed_from_env(), " first failure: ", r.first_failure);
  CHECK(r.failures == 0);
}
}  // namespace

TEST_CASE("property: signature is a congruence invariant") { check(props::signature_congruence(props::seed_from_env())); }
TEST_CASE("property: orthogonal complements are saturated") { check(props::complement_saturation(props::seed_from_env() + 1)); }
TEST_CASE("property: vectors of square match a box search") { check(props::short_vectors_box(props::seed_from_env() + 2)); }
TEST_CASE("property: reflections are involutive isometries") { check(props::reflection_involution(props::seed_from_env() + 3)); }
TEST_CASE("property: g and its inverse have the same type") { check(props::isometry_inverse(props::seed_from_env() + 4)); }
