#pragma once

// Brute-force reference computations used by the tests. None of these call
// the library routine they are compared against.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "weylgraded/fin_set.hpp"
#include "weylgraded/k_theory.hpp"
#include "weylgraded/picard.hpp"
#include "weylgraded/polynomial.hpp"
#include "weylgraded/simple_label.hpp"
#include "weylgraded/skew_element.hpp"

namespace oracle {

using weylgraded::FinSet;
using weylgraded::Int;
using weylgraded::Polynomial;
using weylgraded::Rational;

inline std::uint32_t rotate_mask(std::uint32_t mask, int n, int r) {
  const std::uint32_t full = (n == 32) ? ~0U : ((1U << n) - 1U);
  return ((mask << r) | (mask >> (n - r))) & full;
}

// Number of rotation classes of n-bit words, by orbit enumeration.
inline std::size_t necklace_orbits(int n) {
  std::set<std::uint32_t> reps;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    std::uint32_t best = mask;
    for (int r = 1; r < n; ++r) best = std::min(best, rotate_mask(mask, n, r));
    reps.insert(best);
  }
  return reps.size();
}

// L = J + j (mod n) for some j.
inline bool rotation_equivalent(const FinSet& J, const FinSet& L, Int n) {
  for (Int j = 0; j < n; ++j) {
    std::set<Int> shifted;
    for (Int v : J) shifted.insert(((v + j) % n + n) % n);
    if (std::vector<Int>(shifted.begin(), shifted.end()) == L.elements()) return true;
  }
  return false;
}

// All subsets of [lo, hi] as FinSets (hi - lo small).
inline std::vector<FinSet> all_subsets(Int lo, Int hi) {
  std::vector<FinSet> out;
  const Int width = hi - lo + 1;
  for (std::uint32_t mask = 0; mask < (1U << width); ++mask) {
    std::vector<Int> items;
    for (Int b = 0; b < width; ++b) {
      if (mask & (1U << b)) items.push_back(lo + b);
    }
    out.emplace_back(std::move(items));
  }
  return out;
}

// J xor (J - n) computed elementwise.
inline FinSet boundary_by_definition(const FinSet& J, Int n) {
  std::set<Int> out;
  for (Int v : J) {
    if (!out.insert(v).second) out.erase(v);
  }
  for (Int v : J) {
    if (!out.insert(v - n).second) out.erase(v - n);
  }
  return FinSet(std::vector<Int>(out.begin(), out.end()));
}

// The first Weyl algebra acting on k[t] by x = d/dt, y = multiplication by t,
// so that z = xy acts on t^k as (k + 1). A polynomial in t is a map from
// exponent to coefficient.
using TPoly = std::map<Int, Rational>;

inline void add_term(TPoly& p, Int k, const Rational& c) {
  if (c == 0) return;
  Rational& slot = p[k];
  slot += c;
  if (slot == 0) p.erase(k);
}

// Applies a Weyl algebra element written as sum c_m(z) x^m. Negative degrees
// are rewritten through y^r = (z-1)...(z-r) x^{-r}.
inline TPoly act(const weylgraded::SkewElement& u, const TPoly& p) {
  TPoly out;
  for (const auto& [m, c] : u.terms()) {
    for (const auto& [k, a] : p) {
      Int degree = 0;
      Rational value = a;
      Polynomial coefficient;
      if (m >= 0) {
        if (k < m) continue;
        for (Int s = 0; s < m; ++s) value *= Rational(k - s);
        degree = k - m;
        coefficient = c.as_polynomial();
      } else {
        const Int r = -m;
        coefficient = c.as_polynomial().exact_div(Polynomial::rising(-r, -1));
        degree = k + r;
      }
      add_term(out, degree, value * coefficient.evaluate(Rational(degree + 1)));
    }
  }
  return out;
}

// Direct-sum isomorphism class from membership counts: a sum of m rank-one
// classes with counts c(t) is the chain whose k-th set is {t : c(t) >= m - k}.
inline std::vector<FinSet> chain_from_counts(const weylgraded::ProjectiveSum& sum) {
  std::map<Int, std::size_t> counts;
  for (const auto& s : sum) {
    // iota_J(A)<s>: D = ([0, inf) xor J) + s, exceptions against [0, inf).
    std::set<Int> exceptions;
    auto flip = [&](Int v) {
      if (!exceptions.insert(v).second) exceptions.erase(v);
    };
    for (Int v : s.J) flip(v + s.shift);
    for (Int v = std::min<Int>(0, s.shift); v < std::max<Int>(0, s.shift); ++v) flip(v);
    for (Int v : exceptions) ++counts[v];
  }
  const std::size_t m = sum.size();
  std::vector<FinSet> chain;
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<Int> items;
    for (const auto& [t, c] : counts) {
      if (c >= m - k) items.push_back(t);
    }
    chain.emplace_back(std::move(items));
  }
  return chain;
}

// Images of X<n>, Y<n> for n in [-range, range] and of two M-labels: an
// autoequivalence is determined by where it sends the simples.
inline std::vector<weylgraded::SimpleLabel> action_table(const weylgraded::PicElement& F,
                                                         Int range) {
  using weylgraded::SimpleLabel;
  std::vector<SimpleLabel> out;
  for (Int n = -range; n <= range; ++n) {
    out.push_back(weylgraded::act_on_simple(F, SimpleLabel::X(n)));
    out.push_back(weylgraded::act_on_simple(F, SimpleLabel::Y(n)));
  }
  out.push_back(weylgraded::act_on_simple(F, SimpleLabel::M(Rational(1, 2))));
  out.push_back(weylgraded::act_on_simple(F, SimpleLabel::M(Rational(1, 3))));
  return out;
}

inline FinSet random_set(std::mt19937_64& rng, Int lo, Int hi, std::size_t max_size) {
  std::uniform_int_distribution<Int> value(lo, hi);
  std::uniform_int_distribution<std::size_t> size(0, max_size);
  std::vector<Int> items;
  for (std::size_t k = size(rng); k > 0; --k) items.push_back(value(rng));
  return FinSet(std::move(items));
}

inline weylgraded::PicElement random_pic(std::mt19937_64& rng, Int b_bound, Int j_bound,
                                         std::size_t max_size) {
  std::uniform_int_distribution<Int> b(-b_bound, b_bound);
  std::uniform_int_distribution<int> sign(0, 1);
  const int a = sign(rng) == 0 ? 1 : -1;
  const Int rank = b(rng);
  return weylgraded::PicElement{a, rank, random_set(rng, -j_bound, j_bound, max_size)};
}

}  // namespace oracle
