#include "weylgraded/fin_set.hpp"

#include <algorithm>
#include <iterator>
#include <ostream>
#include <sstream>

#include "weylgraded/errors.hpp"

namespace weylgraded {

FinSet::FinSet(std::initializer_list<Int> elements)
    : FinSet(std::vector<Int>(elements)) {}

FinSet::FinSet(std::vector<Int> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
}

FinSet FinSet::range(Int lo, Int hi) {
  FinSet result;
  for (Int v = lo; v <= hi; ++v) result.elements_.push_back(v);
  return result;
}

bool FinSet::contains(Int value) const {
  return std::binary_search(elements_.begin(), elements_.end(), value);
}

Int FinSet::min() const {
  if (empty()) throw InvalidArgument("min of empty set");
  return elements_.front();
}

Int FinSet::max() const {
  if (empty()) throw InvalidArgument("max of empty set");
  return elements_.back();
}

FinSet FinSet::operator^(const FinSet& other) const {
  FinSet result;
  std::set_symmetric_difference(elements_.begin(), elements_.end(),
                                other.elements_.begin(), other.elements_.end(),
                                std::back_inserter(result.elements_));
  return result;
}

FinSet FinSet::operator|(const FinSet& other) const {
  FinSet result;
  std::set_union(elements_.begin(), elements_.end(), other.elements_.begin(),
                 other.elements_.end(), std::back_inserter(result.elements_));
  return result;
}

FinSet FinSet::operator&(const FinSet& other) const {
  FinSet result;
  std::set_intersection(elements_.begin(), elements_.end(),
                        other.elements_.begin(), other.elements_.end(),
                        std::back_inserter(result.elements_));
  return result;
}

FinSet FinSet::operator-(const FinSet& other) const {
  FinSet result;
  std::set_difference(elements_.begin(), elements_.end(),
                      other.elements_.begin(), other.elements_.end(),
                      std::back_inserter(result.elements_));
  return result;
}

FinSet& FinSet::operator^=(const FinSet& other) {
  *this = *this ^ other;
  return *this;
}

FinSet FinSet::translated(Int offset) const {
  FinSet result = *this;
  for (Int& v : result.elements_) v += offset;
  return result;
}

bool FinSet::is_subset_of(const FinSet& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(),
                       elements_.begin(), elements_.end());
}

std::string FinSet::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FinSet& set) {
  os << '{';
  bool first = true;
  for (Int v : set) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os << '}';
}

bool is_admissible(const FinSet& J, Int n) {
  if (n < 1) return false;
  return J.empty() || (J.min() >= 0 && J.max() < n);
}

AdmissiblePair make_admissible(FinSet J, Int n) {
  if (!is_admissible(J, n)) {
    throw InvalidArgument("(" + J.to_string() + ", " + std::to_string(n) +
                          ") is not an admissible pair");
  }
  return AdmissiblePair{std::move(J), n};
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int floor_mod(Int a, Int b) { return a - b * floor_div(a, b); }

FinSet symmetric_difference(const FinSet& K, const FinSet& J) { return K ^ J; }

FinSet affine_image(const FinSet& J, Int scale, Int offset) {
  if (scale == 0) throw InvalidArgument("affine_image: scale must be nonzero");
  std::vector<Int> out;
  out.reserve(J.size());
  for (Int j : J) out.push_back(scale * j + offset);
  return FinSet(std::move(out));
}

FinSet slice(const FinSet& J, Int n, Int i) {
  if (n < 1 || i < 0 || i >= n) {
    throw InvalidArgument("slice: need n >= 1 and 0 <= i < n");
  }
  std::vector<Int> out;
  for (Int v : J) {
    if (floor_mod(v, n) == i) out.push_back(floor_div(v, n));
  }
  return FinSet(std::move(out));
}

FinSet boundary(const FinSet& J, Int n) {
  if (n < 1) throw InvalidArgument("boundary: n must be positive");
  return J ^ J.translated(-n);
}

bool in_boundary_image(const FinSet& J, Int n) {
  for (Int i = 0; i < n; ++i) {
    if (slice(J, n, i).size() % 2 != 0) return false;
  }
  return true;
}

FinSet inverse_boundary(const FinSet& J, Int n) {
  if (n < 1) throw InvalidArgument("inverse_boundary: n must be positive");
  std::vector<Int> out;
  for (Int i = 0; i < n; ++i) {
    const FinSet column = slice(J, n, i);
    const auto& residue = column.elements();
    if (residue.size() % 2 != 0) {
      throw NotInImage("inverse_boundary: slice " + std::to_string(i) +
                       " of " + J.to_string() + " mod " + std::to_string(n) +
                       " has odd cardinality");
    }
    // Pair a_1 < b_1 < a_2 < b_2 < ... and fill each gap (a, b].
    for (std::size_t p = 0; p < residue.size(); p += 2) {
      for (Int t = residue[p] + 1; t <= residue[p + 1]; ++t) {
        out.push_back(n * t + i);
      }
    }
  }
  return FinSet(std::move(out));
}

}  // namespace weylgraded
