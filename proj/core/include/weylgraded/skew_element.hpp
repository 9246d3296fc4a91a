#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "weylgraded/rational_function.hpp"

namespace weylgraded {

// An element sum_m c_m(z) x^m of the graded quotient ring
// D = Q(z)[x, x^{-1}; sigma], sigma(z) = z + 1, written with coefficients on
// the left. Multiplication follows x^m f(z) = f(z + m) x^m. The Weyl algebra
// sits inside D via x -> x, y -> (z - 1) x^{-1}.
class SkewElement {
 public:
  using Terms = std::map<Int, RationalFunction>;

  SkewElement() = default;
  SkewElement(const RationalFunction& constant);  // NOLINT: degree-0 embedding
  SkewElement(RationalFunction coefficient, Int degree);
  explicit SkewElement(Terms terms);

  static SkewElement x_power(Int m);
  // y^r = (z-1)(z-2)...(z-r) x^{-r} for r >= 0, and
  // y^{-r} = (z(z+1)...(z+r-1))^{-1} x^r.
  static SkewElement y_power(Int r);
  static SkewElement z();

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Zero when the degree is absent.
  RationalFunction coefficient(Int degree) const;
  // True iff exactly one degree is present.
  bool is_homogeneous() const { return terms_.size() == 1; }

  SkewElement operator-() const;
  SkewElement& operator+=(const SkewElement& other);
  SkewElement& operator-=(const SkewElement& other);
  friend SkewElement operator+(SkewElement a, const SkewElement& b) { return a += b; }
  friend SkewElement operator-(SkewElement a, const SkewElement& b) { return a -= b; }
  friend SkewElement operator*(const SkewElement& a, const SkewElement& b);

  friend bool operator==(const SkewElement&, const SkewElement&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

SkewElement skew_multiply(const SkewElement& u, const SkewElement& v);

// f(z + m): the coefficient transport x^m f(z) = f(z + m) x^m.
RationalFunction conjugate_by_power(const RationalFunction& f, Int m);

// The coefficient c with y^r = c(z) x^{-r}: prod_{t=1}^{r} (z - t) for r >= 0,
// and 1 / prod_{t=0}^{-r-1} (z + t) for r < 0.
RationalFunction y_power_coefficient(Int r);

// Membership in the Weyl algebra A: degree m >= 0 coefficients are
// polynomials; degree -r coefficients are polynomial multiples of
// (z-1)...(z-r).
bool weyl_membership(const SkewElement& u);

std::ostream& operator<<(std::ostream& os, const SkewElement& u);

}  // namespace weylgraded
