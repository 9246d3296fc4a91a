#include "weylgraded/classification.hpp"

#include "weylgraded/errors.hpp"

namespace weylgraded {

AdmissibleForm canonical_admissible(const PicElement& F) {
  if (!is_generative(F)) {
    throw InvalidArgument("canonical_admissible: " + F.to_string() +
                          " is not generative (odd or rank 0)");
  }
  PicElement outer = PicElement::identity();
  PicElement even = F;
  if (F.b < 0) {
    outer = PicElement::omega();
    even = conjugate(outer, F);
  }
  const Int n = even.b;
  const FinSet& K = even.J;

  std::vector<Int> odd_slices;
  for (Int i = 0; i < n; ++i) {
    if (slice(K, n, i).size() % 2 == 1) odd_slices.push_back(i);
  }
  FinSet J(std::move(odd_slices));
  // iota_I S^n iota_K iota_I = S^n iota_{(I - n) xor I xor K}, so we need
  // boundary(I) = J xor K.
  const FinSet I = inverse_boundary(J ^ K, n);
  PicElement conjugator = compose(PicElement::iota(I), outer);
  return AdmissibleForm{AdmissiblePair{std::move(J), n}, std::move(conjugator)};
}

bool same_morita_class(const PicElement& F, const PicElement& G) {
  const AdmissibleForm f = canonical_admissible(F);
  const AdmissibleForm g = canonical_admissible(G);
  return f.pair.n == g.pair.n && necklace_canonical(f.pair) == necklace_canonical(g.pair);
}

std::uint64_t morita_class_count(Int n) { return necklace_count(n); }

}  // namespace weylgraded
