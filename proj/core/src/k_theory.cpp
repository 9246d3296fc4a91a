#include "weylgraded/k_theory.hpp"

#include <algorithm>

#include "weylgraded/errors.hpp"

namespace weylgraded {

FinSet absorb_shift(const RankOneSummand& summand) {
  return summand.J.translated(summand.shift) ^ shift_exceptions(summand.shift);
}

ProjectiveSum normalize_sum(const ProjectiveSum& sum) {
  std::vector<FinSet> sets;
  sets.reserve(sum.size());
  for (const auto& summand : sum) sets.push_back(absorb_shift(summand));

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < sets.size() && !changed; ++i) {
      for (std::size_t k = i + 1; k < sets.size(); ++k) {
        if (sets[i].is_subset_of(sets[k]) || sets[k].is_subset_of(sets[i])) continue;
        FinSet meet = sets[i] & sets[k];
        FinSet join = sets[i] | sets[k];
        sets[i] = std::move(meet);
        sets[k] = std::move(join);
        changed = true;
        break;
      }
    }
  }
  std::sort(sets.begin(), sets.end(), [](const FinSet& x, const FinSet& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  ProjectiveSum out;
  out.reserve(sets.size());
  for (auto& s : sets) out.push_back(RankOneSummand{std::move(s), 0});
  return out;
}

bool iso_test(const ProjectiveSum& first, const ProjectiveSum& second) {
  return normalize_sum(first) == normalize_sum(second);
}

StablyFreeWitness stably_free_witness(const FinSet& J) {
  if (!J.empty() && J.min() < 1) {
    throw InvalidArgument("stably_free_witness: " + J.to_string() +
                          " must be a subset of the positive integers");
  }
  // iota_J A + A<m> = iota_{J \ {m}} A + A<m+1> for m = max J.
  StablyFreeWitness witness;
  FinSet rest = J;
  while (!rest.empty()) {
    const Int m = rest.max();
    witness.adds.push_back(m);
    witness.result.push_back(m + 1);
    rest = rest - FinSet{m};
  }
  witness.result.push_back(0);
  return witness;
}

std::optional<ComplementTriple> single_complement_search(const FinSet& J, Int bound) {
  for (Int l = -bound; l <= bound; ++l) {
    const ProjectiveSum left{{J, 0}, {FinSet{}, l}};
    for (Int m = -bound; m <= bound; ++m) {
      for (Int n = m; n <= bound; ++n) {
        if (iso_test(left, ProjectiveSum{{FinSet{}, m}, {FinSet{}, n}})) {
          return ComplementTriple{l, m, n};
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

void add_term(K0Class& c, Int shift, Int coefficient) {
  Int& slot = c.coefficients[shift];
  slot += coefficient;
  if (slot == 0) c.coefficients.erase(shift);
}

// Smallest element of [0, inf) xor E.
Int dset_min(const FinSet& exceptions) {
  if (!exceptions.empty() && exceptions.min() < 0) return exceptions.min();
  Int t = 0;
  while (exceptions.contains(t)) ++t;
  return t;
}

}  // namespace

K0Class k0_class(const ProjectiveSum& sum) {
  K0Class out;
  for (const auto& summand : sum) {
    // iota_E A = (iota_{E'} A)<t> with E' inside {1, 2, ...}.
    const FinSet exceptions = absorb_shift(summand);
    const Int t = dset_min(exceptions);
    const FinSet reduced = absorb_shift(RankOneSummand{exceptions, -t});
    const StablyFreeWitness witness = stably_free_witness(reduced);
    for (Int m : witness.result) add_term(out, m + t, 1);
    for (Int l : witness.adds) add_term(out, l + t, -1);
  }
  return out;
}

PicElement theta_map(const std::vector<std::pair<FinSet, Int>>& combination) {
  FinSet J;
  for (const auto& [set, coefficient] : combination) {
    if (coefficient % 2 != 0) J ^= set;
  }
  return PicElement::iota(std::move(J));
}

}  // namespace weylgraded
