#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "weylgraded/fin_set.hpp"
#include "weylgraded/picard.hpp"

namespace weylgraded {

// iota_J(A)<shift>.
struct RankOneSummand {
  FinSet J;
  Int shift = 0;

  friend bool operator==(const RankOneSummand&, const RankOneSummand&) = default;
};

using ProjectiveSum = std::vector<RankOneSummand>;

// Folds the shift into J: iota_J(A)<s> = iota_{(J+s) xor Delta_s} A, with
// Delta_s the exceptions of A<s>.
FinSet absorb_shift(const RankOneSummand& summand);

// Replaces incomparable pairs (J, K) by (J meet K, J join K) until the sets
// form a chain. The result has zero shifts and is ordered by inclusion.
ProjectiveSum normalize_sum(const ProjectiveSum& sum);

bool iso_test(const ProjectiveSum& first, const ProjectiveSum& second);

struct StablyFreeWitness {
  std::vector<Int> adds;
  std::vector<Int> result;

  friend bool operator==(const StablyFreeWitness&, const StablyFreeWitness&) = default;
};

// iota_J A + sum of A<l> over adds = sum of A<m> over result, for J a subset
// of {1, 2, ...}. Throws InvalidArgument otherwise.
StablyFreeWitness stably_free_witness(const FinSet& J);

// A triple (l, m, n) with iota_J A + A<l> = A<m> + A<n> and |l|, |m|, |n| <= bound,
// if one exists.
struct ComplementTriple {
  Int l = 0;
  Int m = 0;
  Int n = 0;
};
std::optional<ComplementTriple> single_complement_search(const FinSet& J, Int bound);

// sum of c_n [A<n>] in K_0(gr-A); zero coefficients are dropped.
struct K0Class {
  std::map<Int, Int> coefficients;

  friend bool operator==(const K0Class&, const K0Class&) = default;
};

K0Class k0_class(const ProjectiveSum& sum);

// theta(sum c_J [iota_J A]) = product of iota_J^{c_J}, which only sees the
// parity of each coefficient.
PicElement theta_map(const std::vector<std::pair<FinSet, Int>>& combination);

}  // namespace weylgraded
