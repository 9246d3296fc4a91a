#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weylgraded/fin_set.hpp"
#include "weylgraded/k_theory.hpp"
#include "weylgraded/picard.hpp"

namespace weylgraded::cli {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// element := term ('*' term)*
// term    := 'S' ('^' int)? | 'i' '{' int (',' int)* '}' | 'w' | 'e'
// Terms compose as functors: the leftmost is applied last.
PicElement parse_expression(const std::string& text);

// "0,3,-1" or "" -> FinSet.
FinSet parse_int_list(const std::string& text);

// A rank-one summand iota_J(A)<s>: "A", "A<2>", "{0,3}", "{1}<-1>".
RankOneSummand parse_summand(const std::string& text);

// Summands joined by '+': "{1,3} + {0,1,2} + A<1>".
ProjectiveSum parse_sum(const std::string& text);

// Signed integer combination of rank-one classes: "{0,3} - A", "2{0} - 2{}".
std::vector<std::pair<FinSet, Int>> parse_combination(const std::string& text);

}  // namespace weylgraded::cli
