#include "weylgraded/simple_label.hpp"

#include <ostream>

#include "weylgraded/errors.hpp"

namespace weylgraded {

SimpleLabel SimpleLabel::M(const Rational& lambda) {
  if (is_integer(lambda)) {
    throw InvalidArgument("M-label needs a non-integral parameter, got " + rational_to_string(lambda));
  }
  return SimpleLabel(Kind::M, lambda);
}

Int SimpleLabel::index() const {
  if (kind_ == Kind::M) throw InvalidArgument("M-label has no integer index");
  return static_cast<Int>(boost::multiprecision::numerator(param_));
}

std::string SimpleLabel::to_string() const {
  switch (kind_) {
    case Kind::X: return "X(" + rational_to_string(param_) + ")";
    case Kind::Y: return "Y(" + rational_to_string(param_) + ")";
    case Kind::M: return "M(" + rational_to_string(param_) + ")";
  }
  return {};
}

int ext_dim_simples(const SimpleLabel& first, const SimpleLabel& second) {
  using Kind = SimpleLabel::Kind;
  if (first.kind() == Kind::M || second.kind() == Kind::M) {
    return (first.kind() == Kind::M && second == first) ? 1 : 0;
  }
  if (first.index() != second.index()) return 0;
  return first.kind() != second.kind() ? 1 : 0;
}

SimpleLabel parse_simple_label(const std::string& text) {
  if (text.size() < 4 || text[1] != '(' || text.back() != ')') {
    throw InvalidArgument("malformed simple label '" + text + "'");
  }
  const Rational param = parse_rational(text.substr(2, text.size() - 3));
  switch (text[0]) {
    case 'X':
    case 'Y':
      if (!is_integer(param)) throw InvalidArgument("X/Y labels need an integer index");
      return text[0] == 'X' ? SimpleLabel::X(static_cast<Int>(boost::multiprecision::numerator(param)))
                            : SimpleLabel::Y(static_cast<Int>(boost::multiprecision::numerator(param)));
    case 'M':
      return SimpleLabel::M(param);
    default:
      throw InvalidArgument("malformed simple label '" + text + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const SimpleLabel& s) { return os << s.to_string(); }

}  // namespace weylgraded
