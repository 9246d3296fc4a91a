#include "weylgraded/rational_function.hpp"

#include <ostream>

#include "weylgraded/errors.hpp"

namespace weylgraded {

RationalFunction::RationalFunction(const Polynomial& numerator)
    : num_(numerator), den_(1) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw InvalidArgument("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (den_.degree() > 0) {
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    num_ *= Polynomial(Rational(1) / lead);
    den_ = den_.monic();
  }
}

Polynomial RationalFunction::as_polynomial() const {
  if (!is_polynomial()) throw InvalidArgument(to_string() + " is not a polynomial");
  return num_;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
  if (den_ == other.den_) {
    num_ += other.num_;
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ *= other.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& other) {
  return *this += -other;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
  num_ *= other.num_;
  den_ *= other.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& other) {
  return *this *= other.inverse();
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw InvalidArgument("inverse of zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::shifted(const Rational& offset) const {
  return RationalFunction(num_.shifted(offset), den_.shifted(offset));
}

RationalFunction RationalFunction::monic() const {
  if (is_zero()) return *this;
  RationalFunction r = *this;
  r.num_ = r.num_.monic();
  return r;
}

bool RationalFunction::divides(const RationalFunction& other) const {
  if (is_zero()) throw InvalidArgument("divisibility by zero rational function");
  return (other / *this).is_polynomial();
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_factored_string();
  return num_.to_factored_string() + " / " + den_.to_factored_string();
}

RationalFunction fractional_gcd(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  return RationalFunction(gcd(a.numerator(), b.numerator()),
                          lcm(a.denominator(), b.denominator()));
}

RationalFunction fractional_lcm(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  return RationalFunction(lcm(a.numerator(), b.numerator()),
                          gcd(a.denominator(), b.denominator()));
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
  return os << f.to_string();
}

}  // namespace weylgraded
