#pragma once

#include <iosfwd>
#include <string>

#include "weylgraded/polynomial.hpp"

namespace weylgraded {

// A graded simple module: X<n> or Y<n> (both simply supported at -n), or
// M_lambda = A / (z + lambda) A for non-integral rational lambda.
class SimpleLabel {
 public:
  enum class Kind { X, Y, M };

  static SimpleLabel X(Int n) { return SimpleLabel(Kind::X, Rational(n)); }
  static SimpleLabel Y(Int n) { return SimpleLabel(Kind::Y, Rational(n)); }
  // Throws InvalidArgument if lambda is an integer.
  static SimpleLabel M(const Rational& lambda);

  Kind kind() const { return kind_; }
  bool is_integral() const { return kind_ != Kind::M; }
  // Shift index n of X<n> / Y<n>; throws for M-labels.
  Int index() const;
  const Rational& lambda() const { return param_; }
  // The point of Spec k[z] where the simple lives: -n for X<n>, Y<n>; -lambda
  // for M_lambda.
  Rational support_point() const { return -param_; }

  friend bool operator==(const SimpleLabel&, const SimpleLabel&) = default;

  std::string to_string() const;

 private:
  SimpleLabel(Kind kind, Rational param) : kind_(kind), param_(std::move(param)) {}
  Kind kind_;
  Rational param_;
};

// dim ext^1 in gr-A: 1 for {X<n>, Y<n>} in either order and for (M_l, M_l);
// 0 otherwise.
int ext_dim_simples(const SimpleLabel& first, const SimpleLabel& second);

// "X(3)", "Y(-1)", "M(1/2)".
SimpleLabel parse_simple_label(const std::string& text);

std::ostream& operator<<(std::ostream& os, const SimpleLabel& s);

}  // namespace weylgraded
