#include "cli/expression.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace weylgraded::cli {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_integer() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
    if ((c == '-' || c == '+') && pos_ + 1 < text_.size()) {
      return std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) != 0;
    }
    return false;
  }

  Int integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const char* first = text_.data() + start + (text_[start] == '+' ? 1 : 0);
    Int value = 0;
    auto [end, ec] = std::from_chars(first, text_.data() + pos_, value);
    if (ec != std::errc() || end != text_.data() + pos_ || end == first) {
      pos_ = start;
      fail("expected an integer");
    }
    return value;
  }

  // '{' (int (',' int)*)? '}'
  FinSet braced_set() {
    expect('{');
    std::vector<Int> items;
    if (!accept('}')) {
      do {
        items.push_back(integer());
      } while (accept(','));
      expect('}');
    }
    return FinSet(std::move(items));
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  std::size_t position() const { return pos_; }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

PicElement parse_term(Cursor& in) {
  if (in.accept('S')) {
    if (in.accept('^')) return PicElement::shift(in.integer());
    return PicElement::shift(1);
  }
  if (in.accept('i')) {
    if (in.peek() != '{') in.fail("expected '{'");
    const std::size_t at = in.position();
    FinSet J = in.braced_set();
    if (J.empty()) throw ParseError("i{...} needs at least one index", at);
    return PicElement::iota(std::move(J));
  }
  if (in.accept('w')) return PicElement::omega();
  if (in.accept('e')) return PicElement::identity();
  in.fail("expected one of S, i{...}, w, e");
}

RankOneSummand parse_summand_at(Cursor& in) {
  RankOneSummand out;
  if (in.peek() == '{') {
    out.J = in.braced_set();
  } else if (!in.accept('A')) {
    in.fail("expected 'A' or '{'");
  }
  if (in.accept('<')) {
    out.shift = in.integer();
    in.expect('>');
  }
  return out;
}

}  // namespace

PicElement parse_expression(const std::string& text) {
  Cursor in(text);
  if (in.done()) throw ParseError("empty expression", 0);
  PicElement result = parse_term(in);
  while (in.accept('*')) result = compose(result, parse_term(in));
  if (!in.done()) in.fail("unexpected character");
  return result;
}

FinSet parse_int_list(const std::string& text) {
  Cursor in(text);
  std::vector<Int> items;
  if (in.done()) return {};
  do {
    items.push_back(in.integer());
  } while (in.accept(','));
  if (!in.done()) in.fail("unexpected character");
  return FinSet(std::move(items));
}

RankOneSummand parse_summand(const std::string& text) {
  Cursor in(text);
  if (in.done()) throw ParseError("empty module", 0);
  RankOneSummand out = parse_summand_at(in);
  if (!in.done()) in.fail("unexpected character");
  return out;
}

ProjectiveSum parse_sum(const std::string& text) {
  Cursor in(text);
  if (in.done()) return {};
  ProjectiveSum out;
  do {
    out.push_back(parse_summand_at(in));
  } while (in.accept('+'));
  if (!in.done()) in.fail("unexpected character");
  return out;
}

std::vector<std::pair<FinSet, Int>> parse_combination(const std::string& text) {
  Cursor in(text);
  std::vector<std::pair<FinSet, Int>> out;
  if (in.done()) return out;
  if (in.peek() == '0' && (in.integer() == 0)) {
    if (!in.done()) in.fail("unexpected character");
    return out;
  }
  bool first = true;
  while (!in.done()) {
    Int sign = 1;
    if (in.accept('-')) {
      sign = -1;
    } else if (!in.accept('+') && !first) {
      in.fail("expected '+' or '-'");
    }
    first = false;
    Int coefficient = 1;
    if (std::isdigit(static_cast<unsigned char>(in.peek()))) {
      coefficient = in.integer();
      in.accept('*');
    }
    const RankOneSummand summand = parse_summand_at(in);
    out.emplace_back(absorb_shift(summand), sign * coefficient);
  }
  return out;
}

}  // namespace weylgraded::cli
