#include "weylgraded/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "weylgraded/errors.hpp"

namespace weylgraded {

namespace {

// Integer roots above this magnitude are outside what rational_roots scans.
constexpr long kRootScanLimit = 5'000'000;

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// Smallest r >= 0 with r^k >= value.
BigInt integer_root_ceil(const BigInt& value, int k) {
  if (value <= 1) return value;
  BigInt lo = 0;
  BigInt hi = 1;
  while (boost::multiprecision::pow(hi, k) < value) hi *= 2;
  while (lo < hi) {
    BigInt mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, k) >= value) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

std::string format_linear(const Rational& offset, const std::string& var) {
  if (offset == 0) return var;
  std::string out = "(" + var;
  out += offset > 0 ? "+" : "-";
  out += rational_to_string(offset > 0 ? offset : Rational(-offset));
  return out + ")";
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto bad = [&] { return InvalidArgument("malformed rational '" + text + "'"); };
  if (text.empty()) throw bad();
  auto slash = text.find('/');
  auto parse_int = [&](const std::string& part) {
    std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (start == part.size()) throw bad();
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') throw bad();
    }
    return BigInt(part[0] == '+' ? part.substr(1) : part);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InvalidArgument("zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::string rational_to_string(const Rational& value) { return value.str(); }

bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::z() { return Polynomial(std::vector<Rational>{Rational(0), Rational(1)}); }

Polynomial Polynomial::linear(const Rational& offset) {
  return Polynomial(std::vector<Rational>{offset, Rational(1)});
}

Polynomial Polynomial::monomial(const Rational& coefficient, int degree) {
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  c.back() = coefficient;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::linear_product(const FinSet& J) {
  Polynomial result(1);
  for (Int j : J) result *= linear(Rational(j));
  return result;
}

Polynomial Polynomial::rising(Int lo, Int hi) {
  Polynomial result(1);
  for (Int t = lo; t <= hi; ++t) result *= linear(Rational(t));
  return result;
}

bool Polynomial::is_one() const {
  return coeffs_.size() == 1 && coeffs_[0] == 1;
}

Rational Polynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(power)];
}

Rational Polynomial::leading() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::operator-() const {
  Polynomial result = *this;
  for (auto& c : result.coeffs_) c = -c;
  return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw InvalidArgument("polynomial division by zero");
  Polynomial remainder = *this;
  if (degree() < divisor.degree()) return {Polynomial(), remainder};
  std::vector<Rational> quotient(static_cast<std::size_t>(degree() - divisor.degree()) + 1);
  const Rational lead = divisor.leading();
  while (!remainder.is_zero() && remainder.degree() >= divisor.degree()) {
    const int shift = remainder.degree() - divisor.degree();
    const Rational factor = remainder.leading() / lead;
    quotient[static_cast<std::size_t>(shift)] = factor;
    for (std::size_t i = 0; i < divisor.coeffs_.size(); ++i) {
      remainder.coeffs_[i + static_cast<std::size_t>(shift)] -= factor * divisor.coeffs_[i];
    }
    remainder.trim();
  }
  return {Polynomial(std::move(quotient)), remainder};
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) {
    throw InvalidArgument(to_string() + " is not divisible by " + divisor.to_string());
  }
  return q;
}

bool Polynomial::divisible_by(const Polynomial& divisor) const {
  return divmod(divisor).second.is_zero();
}

Polynomial Polynomial::shifted(const Rational& offset) const {
  if (offset == 0 || degree() < 1) return *this;
  Polynomial result;
  const Polynomial step = linear(offset);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    result *= step;
    result += Polynomial(*it);
  }
  return result;
}

Rational Polynomial::evaluate(const Rational& point) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + *it;
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading() == 1) return *this;
  Polynomial result = *this;
  const Rational lead = leading();
  for (auto& c : result.coeffs_) c /= lead;
  return result;
}

std::pair<std::vector<std::pair<Rational, int>>, Polynomial>
Polynomial::rational_roots() const {
  if (is_zero()) throw InvalidArgument("rational_roots of the zero polynomial");
  std::vector<std::pair<Rational, int>> roots;
  Polynomial rest = *this;

  int zero_mult = 0;
  while (rest.degree() >= 1 && rest.coeffs_[0] == 0) {
    rest.coeffs_.erase(rest.coeffs_.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) roots.emplace_back(Rational(0), zero_mult);

  if (rest.degree() >= 1) {
    // Primitive integer form a_n z^n + ... + a_0, then w = a_n z turns it into
    // a monic integer polynomial whose rational roots are integers.
    BigInt den_lcm = 1;
    for (const auto& c : rest.coeffs_) {
      den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(c));
    }
    std::vector<BigInt> a;
    for (const auto& c : rest.coeffs_) {
      a.push_back(boost::multiprecision::numerator(c) * (den_lcm / boost::multiprecision::denominator(c)));
    }
    BigInt content = 0;
    for (const auto& v : a) content = boost::multiprecision::gcd(content, abs_big(v));
    for (auto& v : a) v /= content;
    const int n = static_cast<int>(a.size()) - 1;
    const BigInt lead = a.back();
    std::vector<BigInt> q(a.size());
    BigInt power = 1;
    for (int k = n; k >= 0; --k) {
      // coefficient of w^k is a_k * lead^(n-1-k) for k < n, and 1 for k = n.
      if (k == n) {
        q[static_cast<std::size_t>(k)] = 1;
      } else {
        q[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(k)] * power;
        power *= lead;
      }
    }
    BigInt bound = 0;
    for (int k = 1; k <= n; ++k) {
      BigInt r = integer_root_ceil(abs_big(q[static_cast<std::size_t>(n - k)]), k);
      bound = std::max(bound, r);
    }
    bound = 2 * bound;
    if (bound > kRootScanLimit) {
      throw Unsupported("rational root search bound too large for " + to_string());
    }
    auto eval_q = [&](const BigInt& w) {
      BigInt acc = 0;
      for (auto it = q.rbegin(); it != q.rend(); ++it) acc = acc * w + *it;
      return acc;
    };
    const long limit = bound.convert_to<long>();
    const BigInt constant = abs_big(q[0]);
    for (long w = -limit; w <= limit; ++w) {
      if (w == 0) continue;
      if (constant % BigInt(w < 0 ? -w : w) != 0) continue;
      if (eval_q(BigInt(w)) != 0) continue;
      Rational root(BigInt(w), lead);
      int mult = root_multiplicity(rest, root);
      rest = rest.exact_div(Polynomial(std::vector<Rational>{-root, Rational(1)}));
      for (int i = 1; i < mult; ++i) {
        rest = rest.exact_div(Polynomial(std::vector<Rational>{-root, Rational(1)}));
      }
      roots.emplace_back(root, mult);
    }
  }
  std::sort(roots.begin(), roots.end());
  return {std::move(roots), rest};
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << rational_to_string(mag);
      continue;
    }
    if (mag != 1) os << rational_to_string(mag) << '*';
    os << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

std::string Polynomial::to_factored_string(const std::string& var) const {
  if (degree() < 1) return to_string(var);
  auto [roots, rest] = rational_roots();
  std::vector<std::string> parts;
  Rational scale = rest.leading();
  Polynomial cofactor = rest.monic();
  if (scale != 1) parts.push_back(rational_to_string(scale));
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
    const auto& [root, mult] = *it;
    std::string f = format_linear(-root, var);
    if (mult > 1) f += "^" + std::to_string(mult);
    parts.push_back(f);
  }
  if (cofactor.degree() >= 1) parts.push_back("(" + cofactor.to_string(var) + ")");
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += "*";
    out += parts[i];
  }
  return out;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a.monic();
  Polynomial y = b.monic();
  while (!y.is_zero()) {
    Polynomial r = x.divmod(y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  return (a * b).exact_div(gcd(a, b)).monic();
}

int root_multiplicity(const Polynomial& f, const Rational& root) {
  if (f.is_zero()) throw InvalidArgument("root_multiplicity of the zero polynomial");
  const Polynomial factor(std::vector<Rational>{-root, Rational(1)});
  int mult = 0;
  Polynomial rest = f;
  while (rest.degree() >= 1) {
    auto [q, r] = rest.divmod(factor);
    if (!r.is_zero()) break;
    rest = std::move(q);
    ++mult;
  }
  return mult;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.to_string();
}

}  // namespace weylgraded
