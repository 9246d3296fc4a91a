#include "weylgraded/necklace.hpp"

#include <algorithm>
#include <unordered_set>

#include "weylgraded/errors.hpp"

namespace weylgraded {

FinSet rotate(const FinSet& J, Int n, Int shift) {
  std::vector<Int> out;
  out.reserve(J.size());
  for (Int j : J) out.push_back(floor_mod(j + shift, n));
  return FinSet(std::move(out));
}

NecklaceClass necklace_canonical(const AdmissiblePair& pair) {
  if (!is_admissible(pair.J, pair.n)) {
    throw InvalidArgument("necklace_canonical: pair is not admissible");
  }
  FinSet best = pair.J;
  for (Int shift = 1; shift < pair.n; ++shift) {
    FinSet candidate = rotate(pair.J, pair.n, shift);
    if (candidate.elements() < best.elements()) best = std::move(candidate);
  }
  return NecklaceClass{AdmissiblePair{std::move(best), pair.n}};
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::uint64_t necklace_count(Int n) {
  if (n < 1 || n > 62) {
    throw InvalidArgument("necklace_count: n must lie in [1, 62]");
  }
  const auto size = static_cast<std::uint64_t>(n);
  std::uint64_t total = 0;
  for (std::uint64_t d = 1; d <= size; ++d) {
    if (size % d == 0) total += euler_phi(d) * (std::uint64_t{1} << (size / d));
  }
  return total / size;
}

std::vector<NecklaceClass> necklace_enumerate(Int n) {
  if (n < 1 || n > 24) {
    throw InvalidArgument("necklace_enumerate: n must lie in [1, 24]");
  }
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  auto rotl = [&](std::uint64_t mask) {
    return ((mask << 1) | (mask >> (n - 1))) & full;
  };
  // A mask is the representative iff it is the smallest canonical tuple among
  // its rotations; compare via the FinSet ordering to match necklace_canonical.
  std::vector<NecklaceClass> out;
  std::vector<bool> seen(full + 1, false);
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    if (seen[mask]) continue;
    std::uint64_t r = mask;
    for (Int s = 0; s < n; ++s) {
      seen[r] = true;
      r = rotl(r);
    }
    std::vector<Int> members;
    for (Int i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) members.push_back(i);
    }
    out.push_back(necklace_canonical(AdmissiblePair{FinSet(members), n}));
  }
  return out;
}

}  // namespace weylgraded
