#include "cli/json_codec.hpp"

#include <string>

#include "weylgraded/errors.hpp"

namespace weylgraded::cli {

namespace {

Json coefficient_array(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(rational_to_string(c));
  return out;
}

Polynomial polynomial_from_array(const Json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(parse_rational(c.get<std::string>()));
  return Polynomial(std::move(coeffs));
}

}  // namespace

Json to_json(const FinSet& set) { return Json(set.elements()); }

Json to_json(const AdmissiblePair& pair) { return Json{{"J", to_json(pair.J)}, {"n", pair.n}}; }

Json to_json(const NecklaceClass& necklace) { return to_json(necklace.representative); }

Json to_json(const Polynomial& poly) {
  return Json{{"num", coefficient_array(poly)}, {"den", Json::array({"1"})}};
}

Json to_json(const RationalFunction& f) {
  return Json{{"num", coefficient_array(f.numerator())},
              {"den", coefficient_array(f.denominator())}};
}

Json to_json(const SkewElement& u) {
  Json out = Json::object();
  for (const auto& [m, c] : u.terms()) out[std::to_string(m)] = to_json(c);
  return out;
}

Json to_json(const GradedLattice& lattice) {
  Json gens = Json::object();
  for (Int m = lattice.lo(); m <= lattice.hi(); ++m) {
    gens[std::to_string(m)] = to_json(lattice.generator(m));
  }
  return Json{{"lo", lattice.lo()}, {"hi", lattice.hi()}, {"gens", gens}};
}

Json to_json(const DSet& dset) { return Json{{"exceptions", to_json(dset.exceptions)}}; }

Json to_json(const SimpleLabel& label) { return label.to_string(); }

Json to_json(const PicElement& F) { return Json{{"a", F.a}, {"b", F.b}, {"J", to_json(F.J)}}; }

Json to_json(const AdmissibleForm& form) {
  return Json{{"pair", to_json(form.pair)}, {"conjugator", to_json(form.conjugator)}};
}

Json to_json(const GWAPresentation& presentation) {
  return Json{{"n", presentation.n},
              {"f", to_json(presentation.f)},
              {"fJ", to_json(presentation.idealizer_factor)},
              {"relations", presentation.relations}};
}

Json to_json(const RingPieces& pieces) {
  Json out = Json::object();
  for (const auto& [j, piece] : pieces) {
    out[std::to_string(j)] = Json{{"h", to_json(piece.h)}, {"p", piece.p}};
  }
  return out;
}

Json to_json(const ProjectiveSum& sum) {
  Json out = Json::array();
  for (const auto& s : sum) out.push_back(Json{{"J", to_json(s.J)}, {"shift", s.shift}});
  return out;
}

Json to_json(const StablyFreeWitness& witness) {
  return Json{{"adds", witness.adds}, {"result", witness.result}};
}

Json to_json(const K0Class& k0) {
  Json out = Json::object();
  for (const auto& [n, c] : k0.coefficients) out[std::to_string(n)] = c;
  return out;
}

FinSet finset_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("FinSet must be a JSON integer array");
  std::vector<Int> items = j.get<std::vector<Int>>();
  for (std::size_t k = 1; k < items.size(); ++k) {
    if (items[k - 1] >= items[k]) throw InvalidArgument("FinSet array must be strictly increasing");
  }
  return FinSet(std::move(items));
}

RationalFunction rational_function_from_json(const Json& j) {
  return RationalFunction(polynomial_from_array(j.at("num")), polynomial_from_array(j.at("den")));
}

PicElement pic_from_json(const Json& j) {
  const int a = j.at("a").get<int>();
  if (a != 1 && a != -1) throw InvalidArgument("PicElement sign must be 1 or -1");
  return PicElement{a, j.at("b").get<Int>(), finset_from_json(j.at("J"))};
}

ProjectiveSum projective_sum_from_json(const Json& j) {
  ProjectiveSum out;
  for (const auto& s : j) {
    out.push_back(RankOneSummand{finset_from_json(s.at("J")), s.value("shift", Int{0})});
  }
  return out;
}

}  // namespace weylgraded::cli
