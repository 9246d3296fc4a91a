#pragma once

#include <cstdint>

#include "weylgraded/fin_set.hpp"
#include "weylgraded/necklace.hpp"
#include "weylgraded/picard.hpp"

namespace weylgraded {

struct AdmissibleForm {
  AdmissiblePair pair;
  // g with g o F o g^{-1} = S^n iota_J.
  PicElement conjugator;

  friend bool operator==(const AdmissibleForm&, const AdmissibleForm&) = default;
};

// Conjugates a generative F to S^n iota_J with J in [0, n), n = |rank F|.
// The pair is returned as constructed, not rotated to its necklace
// representative. Throws InvalidArgument if F is not generative.
AdmissibleForm canonical_admissible(const PicElement& F);

// Whether F and G are conjugate, i.e. define graded Morita equivalent rings.
// Throws InvalidArgument if either is not generative.
bool same_morita_class(const PicElement& F, const PicElement& G);

// Number of conjugacy classes of generative elements of rank n.
std::uint64_t morita_class_count(Int n);

}  // namespace weylgraded
