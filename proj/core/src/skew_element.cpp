#include "weylgraded/skew_element.hpp"

#include <ostream>

namespace weylgraded {

SkewElement::SkewElement(const RationalFunction& constant)
    : SkewElement(constant, 0) {}

SkewElement::SkewElement(RationalFunction coefficient, Int degree) {
  if (!coefficient.is_zero()) terms_.emplace(degree, std::move(coefficient));
}

SkewElement::SkewElement(Terms terms) {
  for (auto& [m, c] : terms) {
    if (!c.is_zero()) terms_.emplace(m, std::move(c));
  }
}

SkewElement SkewElement::x_power(Int m) { return SkewElement(RationalFunction(1), m); }

SkewElement SkewElement::y_power(Int r) { return SkewElement(y_power_coefficient(r), -r); }

SkewElement SkewElement::z() { return SkewElement(RationalFunction(Polynomial::z()), 0); }

RationalFunction SkewElement::coefficient(Int degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? RationalFunction() : it->second;
}

SkewElement SkewElement::operator-() const {
  SkewElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

SkewElement& SkewElement::operator+=(const SkewElement& other) {
  for (const auto& [m, c] : other.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

SkewElement& SkewElement::operator-=(const SkewElement& other) { return *this += -other; }

SkewElement operator*(const SkewElement& a, const SkewElement& b) {
  SkewElement result;
  for (const auto& [m, f] : a.terms_) {
    for (const auto& [n, g] : b.terms_) {
      result += SkewElement(f * conjugate_by_power(g, m), m + n);
    }
  }
  return result;
}

SkewElement skew_multiply(const SkewElement& u, const SkewElement& v) { return u * v; }

RationalFunction conjugate_by_power(const RationalFunction& f, Int m) {
  return f.shifted(Rational(m));
}

RationalFunction y_power_coefficient(Int r) {
  if (r >= 0) return RationalFunction(Polynomial::rising(-r, -1));
  return RationalFunction(Polynomial(1), Polynomial::rising(0, -r - 1));
}

bool weyl_membership(const SkewElement& u) {
  for (const auto& [m, c] : u.terms()) {
    if (m >= 0) {
      if (!c.is_polynomial()) return false;
    } else {
      if (!(c / y_power_coefficient(-m)).is_polynomial()) return false;
    }
  }
  return true;
}

std::string SkewElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + it->second.to_string() + ")";
    if (it->first != 0) out += "*x^" + std::to_string(it->first);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const SkewElement& u) { return os << u.to_string(); }

}  // namespace weylgraded
