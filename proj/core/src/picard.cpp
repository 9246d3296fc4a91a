#include "weylgraded/picard.hpp"

#include <cstdint>
#include <ostream>
#include <sstream>

#include "weylgraded/errors.hpp"

namespace weylgraded {

std::string PicElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&]() -> std::ostream& {
    if (!first) os << " * ";
    first = false;
    return os;
  };
  if (b == 1) sep() << "S";
  else if (b != 0) sep() << "S^" << b;
  if (!J.empty()) {
    sep() << "i{";
    bool inner = true;
    for (Int j : J) {
      if (!inner) os << ",";
      inner = false;
      os << j;
    }
    os << "}";
  }
  if (a == -1) sep() << "w";
  if (first) os << "e";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PicElement& F) { return os << F.to_string(); }

FinSet reflect(const FinSet& J, int sign) {
  return sign == 1 ? J : affine_image(J, -1, -1);
}

PicElement compose(const PicElement& F, const PicElement& G) {
  const Int moved = F.a * G.b;
  return PicElement{F.a * G.a, F.b + moved, F.J.translated(-moved) ^ reflect(G.J, F.a)};
}

PicElement inverse(const PicElement& F) {
  // b + a b' = 0 and (J - a b') xor reflect(J', a) = empty.
  const Int b = -F.a * F.b;
  return PicElement{F.a, b, reflect(F.J.translated(F.b), F.a)};
}

PicElement power(const PicElement& F, Int k) {
  PicElement base = k < 0 ? inverse(F) : F;
  auto e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  PicElement result;
  while (e > 0) {
    if (e & 1U) result = compose(result, base);
    base = compose(base, base);
    e >>= 1U;
  }
  return result;
}

PicElement conjugate(const PicElement& g, const PicElement& F) {
  return compose(compose(g, F), inverse(g));
}

SignRank sign_rank(const PicElement& F) {
  return F.a == 1 ? SignRank{1, F.b} : SignRank{-1, F.b - 1};
}

SignRank compose_affine(const SignRank& f, const SignRank& g) {
  return SignRank{f.sign * g.sign, f.sign * g.rank + f.rank};
}

SimpleLabel act_on_simple(const PicElement& F, const SimpleLabel& S) {
  SimpleLabel result = S;
  if (F.a == -1) {
    switch (result.kind()) {
      case SimpleLabel::Kind::X: result = SimpleLabel::Y(-result.index() - 1); break;
      case SimpleLabel::Kind::Y: result = SimpleLabel::X(-result.index() - 1); break;
      case SimpleLabel::Kind::M: result = SimpleLabel::M(-result.lambda() - 1); break;
    }
  }
  if (result.is_integral() && F.J.contains(result.index())) {
    result = result.kind() == SimpleLabel::Kind::X ? SimpleLabel::Y(result.index())
                                                   : SimpleLabel::X(result.index());
  }
  if (F.b != 0) {
    switch (result.kind()) {
      case SimpleLabel::Kind::X: result = SimpleLabel::X(result.index() + F.b); break;
      case SimpleLabel::Kind::Y: result = SimpleLabel::Y(result.index() + F.b); break;
      case SimpleLabel::Kind::M: result = SimpleLabel::M(result.lambda() + F.b); break;
    }
  }
  return result;
}

FinSet shift_exceptions(Int s) {
  if (s > 0) return FinSet::range(0, s - 1);
  if (s < 0) return FinSet::range(s, -1);
  return {};
}

DSet act_on_dset(const PicElement& F, const DSet& E) {
  FinSet exceptions = E.exceptions;
  // omega: D -> Z \ (-1 - D) leaves [0, inf) fixed and reflects the exceptions.
  if (F.a == -1) exceptions = reflect(exceptions, -1);
  exceptions ^= F.J;
  exceptions = exceptions.translated(F.b) ^ shift_exceptions(F.b);
  return DSet{std::move(exceptions)};
}

bool is_generative(const PicElement& F) { return F.a == 1 && F.b != 0; }

std::map<Int, FinSet> coverage_witness(const FinSet& J, Int n, Int window) {
  if (!is_admissible(J, n)) throw InvalidArgument("coverage_witness: pair is not admissible");
  if (window < 1) throw InvalidArgument("coverage_witness: window must be positive");
  std::map<Int, FinSet> witness;
  FinSet gamma;
  for (Int j = 1; j <= window; ++j) {
    gamma ^= J.translated(j * n);
    witness.emplace(j, gamma ^ shift_exceptions(n * j));
  }
  gamma = FinSet{};
  for (Int j = -1; j >= -window; --j) {
    gamma ^= J.translated((j + 1) * n);
    witness.emplace(j, gamma ^ shift_exceptions(n * j));
  }
  return witness;
}

bool coverage_holds(const std::map<Int, FinSet>& witness, Int n, Int window) {
  FinSet all;
  for (const auto& entry : witness) all = all | entry.second;
  for (Int t = -n * window + n; t <= n * window - n; ++t) {
    if (!all.contains(t)) return false;
  }
  return true;
}

}  // namespace weylgraded
