#include "weylgraded/gwa_rings.hpp"

#include <algorithm>

#include "weylgraded/errors.hpp"
#include "weylgraded/graded_lattice.hpp"

namespace weylgraded {

namespace {

void require_admissible(const FinSet& J, Int n, const char* where) {
  if (!is_admissible(J, n)) {
    throw InvalidArgument(std::string(where) + ": (" + J.to_string() + ", " +
                          std::to_string(n) + ") is not admissible");
  }
}

FinSet complement_in_window(const FinSet& J, Int n) { return FinSet::range(0, n - 1) - J; }

Polynomial derivative(const Polynomial& f) {
  std::vector<Rational> out;
  const auto& c = f.coefficients();
  for (std::size_t k = 1; k < c.size(); ++k) out.push_back(c[k] * static_cast<long long>(k));
  return Polynomial(std::move(out));
}

}  // namespace

GWAPresentation present(const FinSet& J, Int n) {
  require_admissible(J, n, "present");
  GWAPresentation out;
  out.n = n;
  out.f = Polynomial::linear_product(complement_in_window(J, n));
  out.idealizer_factor = Polynomial::linear_product(J);
  const std::string ns = std::to_string(n);
  out.relations = {
      "X*z - z*X = " + ns + "*X",
      "Y*z - z*Y = -" + ns + "*Y",
      "X*Y = " + out.f.to_factored_string(),
      "Y*X = " + out.f.shifted(Rational(-n)).to_factored_string(),
  };
  return out;
}

bool gwa_simple_hereditary(const Polynomial& f, Int n) {
  if (f.is_zero() || n < 1) return false;
  if (f.degree() < 1) return true;
  if (gcd(f, derivative(f)).degree() > 0) return false;
  // Every root has absolute value below the Cauchy bound, so two roots can
  // only differ by k*n for k*n < 2 * bound.
  const Polynomial g = f.monic();
  Rational bound = 0;
  for (int k = 0; k < g.degree(); ++k) bound = std::max(bound, Rational(abs(g.coefficient(k))));
  bound += 1;
  for (Int k = 1; Rational(k * n) < 2 * bound; ++k) {
    if (gcd(f, f.shifted(Rational(k * n))).degree() > 0) return false;
  }
  return true;
}

SkewElement piece_element(const GradedPiece& piece) {
  return SkewElement(RationalFunction(piece.h), 0) * SkewElement::y_power(piece.p);
}

GradedPiece piece_from_x_form(const RationalFunction& c, Int p) {
  const RationalFunction h = c / y_power_coefficient(p);
  if (!h.is_polynomial()) {
    throw InvalidArgument("piece_from_x_form: " + h.to_string() + " is not a polynomial");
  }
  return GradedPiece{h.as_polynomial().monic(), p};
}

GradedPiece graded_piece_closed_form(const FinSet& J, Int n, Int j) {
  require_admissible(J, n, "graded_piece_closed_form");
  const Polynomial fJ = Polynomial::linear_product(J);
  if (j == 0) return GradedPiece{Polynomial(1), 0};
  if (j < 0) return GradedPiece{fJ, -n * j};
  const SkewElement X =
      SkewElement(RationalFunction(Polynomial::linear_product(complement_in_window(J, n))), 0) *
      SkewElement::y_power(-n);
  SkewElement product(RationalFunction(fJ), 0);
  for (Int step = 0; step < j; ++step) product = product * X;
  return piece_from_x_form(product.coefficient(n * j), -n * j);
}

GradedPiece twisted_endo_piece_oracle(const FinSet& J, Int n, Int j) {
  require_admissible(J, n, "twisted_endo_piece_oracle");
  GradedLattice M = GradedLattice::unit();
  if (j >= 1) {
    for (Int i = 1; i <= j; ++i) M = iota_inverse_apply(M, J.translated(n * i));
  } else {
    for (Int i = 0; i <= -j - 1; ++i) M = iota_apply(M, J.translated(-n * i));
  }
  return piece_from_x_form(M.generator(n * j), -n * j);
}

RingPieces ring_pieces(const FinSet& J, Int n, Int from, Int to) {
  RingPieces out;
  for (Int j = from; j <= to; ++j) out.emplace(j, graded_piece_closed_form(J, n, j));
  return out;
}

RingPieces ring_pieces_oracle(const FinSet& J, Int n, Int from, Int to) {
  RingPieces out;
  for (Int j = from; j <= to; ++j) out.emplace(j, twisted_endo_piece_oracle(J, n, j));
  return out;
}

bool verify_ring_closure(const FinSet& J, Int n, Int window) {
  require_admissible(J, n, "verify_ring_closure");
  const RingPieces pieces = ring_pieces(J, n, -window, window);
  std::map<Int, SkewElement> gens;
  for (const auto& [j, piece] : pieces) gens.emplace(j, piece_element(piece));
  for (Int i = -window; i <= window; ++i) {
    for (Int j = -window; j <= window; ++j) {
      if (i + j < -window || i + j > window) continue;
      const SkewElement product = gens.at(i) * gens.at(j);
      if (product.is_zero()) continue;
      if (!product.is_homogeneous() || product.terms().begin()->first != n * (i + j)) return false;
      const RationalFunction target = gens.at(i + j).coefficient(n * (i + j));
      if (!(product.coefficient(n * (i + j)) / target).is_polynomial()) return false;
    }
  }
  return true;
}

bool verify_gwa_embedding(const FinSet& J, Int n) {
  require_admissible(J, n, "verify_gwa_embedding");
  const Polynomial f = Polynomial::linear_product(complement_in_window(J, n));
  const SkewElement z = SkewElement::z();
  const SkewElement X = SkewElement(RationalFunction(f), 0) * SkewElement::y_power(-n);
  const SkewElement Y = SkewElement::y_power(n);
  const SkewElement scalar_n(RationalFunction(static_cast<int>(n)), 0);
  const Polynomial full = Polynomial::rising(0, n - 1);
  return X * z - z * X == scalar_n * X &&
         Y * z - z * Y == -(scalar_n * Y) &&
         X * Y == SkewElement(RationalFunction(f), 0) &&
         Y * X == SkewElement(RationalFunction(f.shifted(Rational(-n))), 0) &&
         SkewElement::x_power(n) ==
             SkewElement(RationalFunction(full), 0) * SkewElement::y_power(-n) &&
         f * Polynomial::linear_product(J) == full;
}

}  // namespace weylgraded
