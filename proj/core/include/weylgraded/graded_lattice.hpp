#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "weylgraded/fin_set.hpp"
#include "weylgraded/rational_function.hpp"
#include "weylgraded/simple_label.hpp"

namespace weylgraded {

// Isomorphism class of a rank-1 graded projective, stored as the finite set
// of exceptions E with D(P) = [0, inf) xor E, where D(P) is the set of j
// for which the simple factor supported at -j is X<j>.
struct DSet {
  FinSet exceptions;

  bool contains(Int j) const { return (j >= 0) != exceptions.contains(j); }

  friend bool operator==(const DSet&, const DSet&) = default;
};

// A graded right A-submodule of D with one cyclic k[z]-generator per degree:
// the degree-m piece is g_m(z) k[z] x^m. Generators are stored for degrees in
// [lo, hi]; outside the window
//   g_m = g_hi                 for m > hi,
//   g_m = g_{m+1} * (z + m)    for m < lo,
// so the piece at m < lo is the piece at m + 1 times y. Generators are kept
// monic and the window as small as the tails allow, so == compares the
// underlying submodules.
class GradedLattice {
 public:
  // Throws InvalidArgument on an empty window or a zero generator.
  GradedLattice(Int lo, std::vector<RationalFunction> generators);

  // The Weyl algebra itself: g_m = 1 for m >= 0.
  static GradedLattice unit();

  Int lo() const { return lo_; }
  Int hi() const { return lo_ + static_cast<Int>(gens_.size()) - 1; }
  RationalFunction generator(Int m) const;
  // Generators for every degree in [from, to].
  std::vector<RationalFunction> generators(Int from, Int to) const;

  friend bool operator==(const GradedLattice&, const GradedLattice&) = default;

  std::string to_string() const;

 private:
  Int lo_;
  std::vector<RationalFunction> gens_;
};

std::ostream& operator<<(std::ostream& os, const GradedLattice& lattice);

// (c(z) x^k) * L.
GradedLattice left_multiply(const GradedLattice& L, const RationalFunction& c, Int k);
// x^s * L, a copy of L<s>.
GradedLattice lattice_shift(const GradedLattice& L, Int s);
// f * L; throws InvalidArgument if f == 0.
GradedLattice lattice_scale(const GradedLattice& L, const RationalFunction& f);
GradedLattice lattice_intersect(const GradedLattice& L1, const GradedLattice& L2);
GradedLattice lattice_sum(const GradedLattice& L1, const GradedLattice& L2);

// Closure under right multiplication by x and y at every degree.
bool is_A_module(const GradedLattice& L);

// iota_i(A) built from the explicit ideals (z+i)A + x^{i+1}A, xA, yA,
// (z+i)A + y^{-i}A.
GradedLattice iota_single_lattice(Int i);
// iota_J(A)<shift>: intersection of iota_i(A) over i in J, shifted.
GradedLattice iota_lattice(const FinSet& J, Int shift);

// Which of the two candidate maximal submodules with quotient supported at -j
// is an A-submodule: the X-type candidate multiplies g_m by (z+j) for m <= j,
// the Y-type candidate for m > j.
struct SimpleQuotients {
  bool x_quotient = false;
  bool y_quotient = false;
};
SimpleQuotients simple_quotients(const GradedLattice& L, Int j);

// F_j(L): X(j) when g_j = g_{j+1}, Y(j) when g_j = (z+j) g_{j+1}. Throws
// InvalidArgument for anything else (L not a rank-1 projective lattice).
SimpleLabel simple_factor(const GradedLattice& L, Int j);

// The reject of F_j(L) in L, i.e. iota_j applied to L.
GradedLattice iota_apply(const GradedLattice& L, Int j);
GradedLattice iota_apply(const GradedLattice& L, const FinSet& J);
// iota_J^{-1}(L) = f_J^{-1} iota_J(L).
GradedLattice iota_inverse_apply(const GradedLattice& L, const FinSet& J);

// D(L) read from the simple factors of L.
DSet lattice_dset(const GradedLattice& L);
// D(iota_J(A)<shift>) = ([0, inf) xor J) + shift.
DSet to_dset(const FinSet& J, Int shift);

// Monic generator h of {q in k(z) : q P is contained in Q}.
RationalFunction hom_generator(const GradedLattice& P, const GradedLattice& Q);

// Support multiset of Q / hP for h = hom_generator(P, Q), as
// (point, number of composition factors) sorted by point.
std::vector<std::pair<Rational, int>> cokernel_support(const GradedLattice& P,
                                                       const GradedLattice& Q);

}  // namespace weylgraded
