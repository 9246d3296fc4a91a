#pragma once

#include <iosfwd>
#include <string>

#include "weylgraded/polynomial.hpp"

namespace weylgraded {

// An element of Q(z) as a reduced fraction with a monic denominator.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const Polynomial& numerator);  // NOLINT: k[z] embeds in k(z)
  RationalFunction(const Rational& constant) : RationalFunction(Polynomial(constant)) {}  // NOLINT
  RationalFunction(int constant) : RationalFunction(Polynomial(constant)) {}  // NOLINT
  RationalFunction(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  // Numerator as a polynomial; throws InvalidArgument unless is_polynomial().
  Polynomial as_polynomial() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& other);
  RationalFunction& operator-=(const RationalFunction& other);
  RationalFunction& operator*=(const RationalFunction& other);
  RationalFunction& operator/=(const RationalFunction& other);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  RationalFunction inverse() const;
  // f(z + offset)
  RationalFunction shifted(const Rational& offset) const;
  // Scaled so the numerator is monic (zero stays zero).
  RationalFunction monic() const;

  // True iff other / *this lies in Q[z] (this must be nonzero).
  bool divides(const RationalFunction& other) const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  std::string to_string() const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

// Monic generator of the fractional ideal a*Q[z] + b*Q[z].
RationalFunction fractional_gcd(const RationalFunction& a, const RationalFunction& b);
// Monic generator of a*Q[z] intersected with b*Q[z].
RationalFunction fractional_lcm(const RationalFunction& a, const RationalFunction& b);

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace weylgraded
