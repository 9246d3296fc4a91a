#pragma once

#include <map>
#include <string>
#include <vector>

#include "weylgraded/fin_set.hpp"
#include "weylgraded/polynomial.hpp"
#include "weylgraded/skew_element.hpp"

namespace weylgraded {

// W(f, n) = k<X, Y, z> with Xz - zX = nX, Yz - zY = -nY, XY = f, YX = f(z - n),
// together with the idealizer factor of S(J, n) = k[z] + f_J W.
struct GWAPresentation {
  Int n = 1;
  Polynomial f;                // f_{J-bar}, J-bar = {0, ..., n-1} \ J
  Polynomial idealizer_factor;  // f_J
  std::vector<std::string> relations;
};

// The graded piece h(z) y^p k[z] of S(J, n) in degree n*j of D.
struct GradedPiece {
  Polynomial h;
  Int p = 0;

  friend bool operator==(const GradedPiece&, const GradedPiece&) = default;
};

using RingPieces = std::map<Int, GradedPiece>;

// Throws InvalidArgument unless (J, n) is admissible.
GWAPresentation present(const FinSet& J, Int n);

// Squarefree with no two roots differing by a nonzero multiple of n: the
// condition for W(f, n) to be simple hereditary.
bool gwa_simple_hereditary(const Polynomial& f, Int n);

// h(z) y^p as an element of D.
SkewElement piece_element(const GradedPiece& piece);
// The piece c(z) x^{-p} k[z] rewritten as h(z) y^p k[z]; h is made monic.
GradedPiece piece_from_x_form(const RationalFunction& c, Int p);

// S_j from the explicit formulas: k[z] for j = 0, f_J y^{-nj} k[z] for j < 0,
// and f_J (f_{J-bar} y^{-n})^j k[z] expanded in D for j > 0.
GradedPiece graded_piece_closed_form(const FinSet& J, Int n, Int j);

// S_j computed independently as the degree-nj piece of the lattice M(j),
// built from A by iterated involution rejects and their f^{-1} rescalings.
GradedPiece twisted_endo_piece_oracle(const FinSet& J, Int n, Int j);

RingPieces ring_pieces(const FinSet& J, Int n, Int from, Int to);
RingPieces ring_pieces_oracle(const FinSet& J, Int n, Int from, Int to);

// S_i S_j contained in S_{i+j} for |i|, |j|, |i + j| <= window.
bool verify_ring_closure(const FinSet& J, Int n, Int window);

// X = f_{J-bar} y^{-n}, Y = y^n and z satisfy the four relations of
// W(f_{J-bar}, n) in D, and x^n = z(z+1)...(z+n-1) y^{-n}.
bool verify_gwa_embedding(const FinSet& J, Int n);

}  // namespace weylgraded
