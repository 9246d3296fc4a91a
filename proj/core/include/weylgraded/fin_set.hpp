#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace weylgraded {

using Int = std::int64_t;

// A finite subset of the integers. Elements are kept strictly increasing, so
// two sets are equal iff their element vectors are equal. Under symmetric
// difference the finite sets form an abelian group of exponent 2.
class FinSet {
 public:
  FinSet() = default;
  FinSet(std::initializer_list<Int> elements);
  explicit FinSet(std::vector<Int> elements);

  // All integers in [lo, hi]; empty when hi < lo.
  static FinSet range(Int lo, Int hi);

  const std::vector<Int>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(Int value) const;
  Int min() const;
  Int max() const;

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  FinSet operator^(const FinSet& other) const;  // symmetric difference
  FinSet operator|(const FinSet& other) const;
  FinSet operator&(const FinSet& other) const;
  FinSet operator-(const FinSet& other) const;  // set difference
  FinSet& operator^=(const FinSet& other);

  // J + offset
  FinSet translated(Int offset) const;
  bool is_subset_of(const FinSet& other) const;

  friend bool operator==(const FinSet&, const FinSet&) = default;
  friend auto operator<=>(const FinSet& a, const FinSet& b) {
    return a.elements_ <=> b.elements_;
  }

  std::string to_string() const;

 private:
  std::vector<Int> elements_;
};

std::ostream& operator<<(std::ostream& os, const FinSet& set);

// A pair (J, n) with n >= 1 and J a subset of {0, ..., n-1}.
struct AdmissiblePair {
  FinSet J;
  Int n = 1;

  friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
};

bool is_admissible(const FinSet& J, Int n);
// Throws InvalidArgument unless (J, n) is admissible.
AdmissiblePair make_admissible(FinSet J, Int n);

// Floor division and non-negative remainder.
Int floor_div(Int a, Int b);
Int floor_mod(Int a, Int b);

FinSet symmetric_difference(const FinSet& K, const FinSet& J);

// {scale * j + offset : j in J}. scale must be nonzero.
FinSet affine_image(const FinSet& J, Int scale, Int offset);

// {j : n*j + i in J} for 0 <= i < n.
FinSet slice(const FinSet& J, Int n, Int i);

// J xor (J - n).
FinSet boundary(const FinSet& J, Int n);

// The unique K with boundary(K, n) == J. Throws NotInImage if some residue
// slice of J has odd cardinality.
FinSet inverse_boundary(const FinSet& J, Int n);

bool in_boundary_image(const FinSet& J, Int n);

}  // namespace weylgraded
