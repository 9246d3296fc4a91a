#pragma once

#include <cstdint>
#include <vector>

#include "weylgraded/fin_set.hpp"

namespace weylgraded {

// Rotation class of an admissible pair. The representative is the
// lexicographically least rotation (J + j) mod n, read as a sorted tuple.
// Reflections are not identified.
struct NecklaceClass {
  AdmissiblePair representative;

  friend bool operator==(const NecklaceClass&, const NecklaceClass&) = default;
};

// (J + shift) mod n, for J a subset of {0, ..., n-1}.
FinSet rotate(const FinSet& J, Int n, Int shift);

NecklaceClass necklace_canonical(const AdmissiblePair& pair);

// (1/n) * sum over d | n of phi(d) * 2^(n/d). Defined for 1 <= n <= 62.
std::uint64_t necklace_count(Int n);

// Every rotation class at size n, ordered by the smallest bit mask in each
// class. Exhaustive over 2^n subsets; n <= 24.
std::vector<NecklaceClass> necklace_enumerate(Int n);

std::uint64_t euler_phi(std::uint64_t n);

}  // namespace weylgraded
