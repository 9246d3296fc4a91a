#pragma once

#include <json.hpp>

#include "weylgraded/classification.hpp"
#include "weylgraded/fin_set.hpp"
#include "weylgraded/graded_lattice.hpp"
#include "weylgraded/gwa_rings.hpp"
#include "weylgraded/k_theory.hpp"
#include "weylgraded/necklace.hpp"
#include "weylgraded/picard.hpp"
#include "weylgraded/polynomial.hpp"
#include "weylgraded/rational_function.hpp"
#include "weylgraded/simple_label.hpp"
#include "weylgraded/skew_element.hpp"

namespace weylgraded::cli {

using Json = nlohmann::ordered_json;

Json to_json(const FinSet& set);
Json to_json(const AdmissiblePair& pair);
Json to_json(const NecklaceClass& necklace);
Json to_json(const Polynomial& poly);
Json to_json(const RationalFunction& f);
Json to_json(const SkewElement& u);
Json to_json(const GradedLattice& lattice);
Json to_json(const DSet& dset);
Json to_json(const SimpleLabel& label);
Json to_json(const PicElement& F);
Json to_json(const AdmissibleForm& form);
Json to_json(const GWAPresentation& presentation);
Json to_json(const RingPieces& pieces);
Json to_json(const ProjectiveSum& sum);
Json to_json(const StablyFreeWitness& witness);
Json to_json(const K0Class& k0);

FinSet finset_from_json(const Json& j);
RationalFunction rational_function_from_json(const Json& j);
PicElement pic_from_json(const Json& j);
ProjectiveSum projective_sum_from_json(const Json& j);

}  // namespace weylgraded::cli
