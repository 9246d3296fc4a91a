#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "weylgraded/fin_set.hpp"

namespace weylgraded {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" or "p"; throws InvalidArgument on malformed text or zero denominator.
Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& value);
bool is_integer(const Rational& value);

// Dense univariate polynomial over Q in the variable z. Coefficients are
// stored in ascending degree with no trailing zeros; the zero polynomial has
// no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT: implicit scalar embedding
  Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial z();
  // z + offset
  static Polynomial linear(const Rational& offset);
  static Polynomial monomial(const Rational& coefficient, int degree);
  // prod_{j in J} (z + j)
  static Polynomial linear_product(const FinSet& J);
  // prod_{t = lo}^{hi} (z + t); 1 when hi < lo.
  static Polynomial rising(Int lo, Int hi);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int power) const;
  Rational leading() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }

  // Euclidean division; throws InvalidArgument on a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  // Exact quotient; throws InvalidArgument if the division leaves a remainder.
  Polynomial exact_div(const Polynomial& divisor) const;
  bool divisible_by(const Polynomial& divisor) const;

  // f(z + offset)
  Polynomial shifted(const Rational& offset) const;
  Rational evaluate(const Rational& point) const;
  // Scaled to leading coefficient 1 (zero stays zero).
  Polynomial monic() const;

  // Rational roots with multiplicity, ascending. Non-rational factors are
  // ignored; the second member of the result is the cofactor left after
  // removing every rational linear factor.
  std::pair<std::vector<std::pair<Rational, int>>, Polynomial> rational_roots()
      const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string(const std::string& var = "z") const;
  // Product of linear factors where possible, e.g. "z*(z+1)^2".
  std::string to_factored_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
// Monic lcm; lcm with 0 is 0.
Polynomial lcm(const Polynomial& a, const Polynomial& b);
// Multiplicity of (z - root) in f (f nonzero).
int root_multiplicity(const Polynomial& f, const Rational& root);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace weylgraded
