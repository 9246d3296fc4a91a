#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "weylgraded/fin_set.hpp"
#include "weylgraded/graded_lattice.hpp"
#include "weylgraded/simple_label.hpp"

namespace weylgraded {

// Normal form S^b * iota_J * omega^{[a = -1]} of an autoequivalence of gr-A,
// functors composed right to left. S is the shift M -> M<1>, iota_J swaps
// X<j> and Y<j> for j in J, omega is the odd autoequivalence induced by
// x -> y, y -> -x.
struct PicElement {
  int a = 1;
  Int b = 0;
  FinSet J;

  static PicElement identity() { return {}; }
  static PicElement shift(Int b) { return {1, b, {}}; }
  static PicElement iota(FinSet J) { return {1, 0, std::move(J)}; }
  static PicElement omega() { return {-1, 0, {}}; }

  bool is_identity() const { return a == 1 && b == 0 && J.empty(); }
  bool is_odd() const { return a == -1; }

  friend bool operator==(const PicElement&, const PicElement&) = default;

  // Round-trips through the expression parser: "e", "S^2 * i{0,2} * w".
  std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const PicElement& F);

// -1 - J for sign -1, J for sign +1.
FinSet reflect(const FinSet& J, int sign);

// F o G.
PicElement compose(const PicElement& F, const PicElement& G);
PicElement inverse(const PicElement& F);
// F^k for any integer k.
PicElement power(const PicElement& F, Int k);
// g o F o g^{-1}.
PicElement conjugate(const PicElement& g, const PicElement& F);

// Affine map lambda -> sign * lambda + rank induced on M_lambda. omega has
// sign -1 and rank -1, so an odd normal form (-1, b, J) has rank b - 1.
struct SignRank {
  int sign = 1;
  Int rank = 0;

  friend bool operator==(const SignRank&, const SignRank&) = default;
};
SignRank sign_rank(const PicElement& F);
// (f o g)(n) = f(g(n)) for affine maps n -> sign * n + rank.
SignRank compose_affine(const SignRank& f, const SignRank& g);

SimpleLabel act_on_simple(const PicElement& F, const SimpleLabel& S);
DSet act_on_dset(const PicElement& F, const DSet& E);

// Even with nonzero rank.
bool is_generative(const PicElement& F);

// {0, ..., s-1} for s > 0, {s, ..., -1} for s < 0, empty for s = 0: the
// exceptions of A<s>.
FinSet shift_exceptions(Int s);

// The sets J_j with F^j A = iota_{J_j} A for F = S^n iota_J and
// 0 < |j| <= window.
std::map<Int, FinSet> coverage_witness(const FinSet& J, Int n, Int window);
// Whether the union of the witness sets contains [-n*window + n, n*window - n].
bool coverage_holds(const std::map<Int, FinSet>& witness, Int n, Int window);

}  // namespace weylgraded
