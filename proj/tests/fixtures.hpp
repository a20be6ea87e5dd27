#pragma once

#include "cusp/period.hpp"
#include "cusp/surface.hpp"

namespace fixtures {

inline const std::vector<long> kSeed{-1, -2, -1, -1, -1, -1, -2};

// Toric seed blown up once on every (-1)-component: seven (-2)-curves.
inline cusp::LooijengaSurface fiber_surface() {
  cusp::LooijengaSurface s = cusp::toric_from_sequence(kSeed).surface;
  for (std::size_t i : {0, 2, 3, 4, 5}) s = cusp::interior_blowup(s, i);
  return s;
}

// The lexicographically first representative of the root pair of Lambda(Y,D).
inline cusp::Vector beta_class(const cusp::Sublattice& lambda) {
  cusp::ShortVectors sv = cusp::vectors_of_square(lambda.as_lattice(), -2);
  for (const auto& r : sv.representatives)
    if (r == cusp::primitive_normalized(r)) return lambda.to_ambient(r);
  return {};
}

}  // namespace fixtures
