#pragma once

#include <cstdint>
#include <string>

namespace props {

struct Result {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

/// CUSPCHECK_SEED if set, a fixed default otherwise.
std::uint64_t seed_from_env();

Result signature_congruence(std::uint64_t seed, std::size_t cases = 200);
Result complement_saturation(std::uint64_t seed, std::size_t cases = 200);
Result short_vectors_box(std::uint64_t seed, std::size_t cases = 50);
Result reflection_involution(std::uint64_t seed, std::size_t cases = 500);
Result isometry_inverse(std::uint64_t seed, std::size_t cases = 200);

}  // namespace props
