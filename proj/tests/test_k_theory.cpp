#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "weylgraded/errors.hpp"
#include "weylgraded/k_theory.hpp"

using namespace weylgraded;

namespace {

ProjectiveSum pure(std::initializer_list<FinSet> sets) {
  ProjectiveSum out;
  for (const auto& s : sets) out.push_back({s, 0});
  return out;
}

ProjectiveSum free_sum(const std::vector<Int>& shifts) {
  ProjectiveSum out;
  for (Int s : shifts) out.push_back({{}, s});
  return out;
}

std::vector<FinSet> sets_of(const ProjectiveSum& sum) {
  std::vector<FinSet> out;
  for (const auto& s : sum) out.push_back(s.J);
  return out;
}

ProjectiveSum random_sum(std::mt19937_64& rng, int max_terms) {
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::uniform_int_distribution<Int> shift(-3, 3);
  ProjectiveSum out;
  for (int k = terms(rng); k > 0; --k) out.push_back({oracle::random_set(rng, -4, 4, 4), shift(rng)});
  return out;
}

ProjectiveSum concat(ProjectiveSum a, const ProjectiveSum& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

TEST(KTheory, ShiftAbsorption) {
  EXPECT_EQ(absorb_shift({{}, 3}), (FinSet{0, 1, 2}));
  EXPECT_EQ(absorb_shift({{}, -2}), (FinSet{-2, -1}));
  EXPECT_EQ(absorb_shift({{0}, 1}), (FinSet{0, 1}));
}

TEST(KTheory, NormalizeExamples) {
  EXPECT_EQ(sets_of(normalize_sum(pure({{1, 3}, {0, 1, 2}}))), (std::vector<FinSet>{{1}, {0, 1, 2, 3}}));
  EXPECT_EQ(sets_of(normalize_sum(pure({{2, 5}}))), (std::vector<FinSet>{{2, 5}}));
  EXPECT_EQ(sets_of(normalize_sum(pure({{0}, {1}}))), (std::vector<FinSet>{{}, {0, 1}}));
}

TEST(KTheory, IsoExamples) {
  EXPECT_TRUE(iso_test(pure({{1, 3}, {0, 1, 2}, {0}}), pure({{0, 1, 2, 3}, {0, 1}, {}})));
  EXPECT_FALSE(iso_test(pure({{0}}), pure({{}})));
  const ProjectiveSum P = pure({{1}, {2, 4}});
  EXPECT_TRUE(iso_test(P, P));
  // iota_{1,3}A + A<3> + A<1> = A<4> + A<2> + A.
  EXPECT_TRUE(iso_test(concat(pure({{1, 3}}), free_sum({3, 1})), free_sum({4, 2, 0})));
}

TEST(KTheory, NormalizeMatchesMembershipCounts) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 1000; ++trial) {
    const ProjectiveSum P = random_sum(rng, 5);
    const ProjectiveSum normal = normalize_sum(P);
    EXPECT_EQ(sets_of(normal), oracle::chain_from_counts(P));
    EXPECT_EQ(normalize_sum(normal), normal);
    ProjectiveSum shuffled = P;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(normalize_sum(shuffled), normal);
  }
}

TEST(KTheory, Cancellation) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 1000; ++trial) {
    const ProjectiveSum P = random_sum(rng, 3);
    const ProjectiveSum Q = random_sum(rng, 2);
    ProjectiveSum Q2 = random_sum(rng, 2);
    if (trial % 3 == 0) Q2 = normalize_sum(Q);
    EXPECT_EQ(iso_test(concat(P, Q), concat(P, Q2)), iso_test(Q, Q2));
  }
}

TEST(KTheory, StablyFreeWitness) {
  const StablyFreeWitness foo = stably_free_witness({1, 3});
  EXPECT_EQ(foo.adds, (std::vector<Int>{3, 1}));
  EXPECT_EQ(foo.result, (std::vector<Int>{4, 2, 0}));
  EXPECT_EQ(stably_free_witness({}), (StablyFreeWitness{{}, {0}}));
  EXPECT_EQ(stably_free_witness({1}), (StablyFreeWitness{{1}, {2, 0}}));
  EXPECT_THROW(stably_free_witness({0, 2}), InvalidArgument);
  for (const FinSet& J : oracle::all_subsets(1, 6)) {
    const StablyFreeWitness w = stably_free_witness(J);
    EXPECT_TRUE(iso_test(concat(pure({J}), free_sum(w.adds)), free_sum(w.result))) << J;
  }
}

TEST(KTheory, NoSingleFreeComplement) {
  EXPECT_FALSE(single_complement_search({1, 3}, 8).has_value());
  // A single step suffices for iota_{1} A.
  const auto found = single_complement_search({1}, 3);
  ASSERT_TRUE(found.has_value());
  EXPECT_TRUE(iso_test(ProjectiveSum{{{1}, 0}, {{}, found->l}}, free_sum({found->m, found->n})));
}

TEST(KTheory, K0Classes) {
  EXPECT_EQ(k0_class(free_sum({2})).coefficients, (std::map<Int, Int>{{2, 1}}));
  EXPECT_EQ(k0_class(pure({{1, 3}})).coefficients,
            (std::map<Int, Int>{{0, 1}, {1, -1}, {2, 1}, {3, -1}, {4, 1}}));
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 300; ++trial) {
    const ProjectiveSum P = random_sum(rng, 3);
    const ProjectiveSum Q = random_sum(rng, 3);
    // Isomorphic sums have equal classes; classes add.
    EXPECT_EQ(k0_class(P), k0_class(normalize_sum(P)));
    K0Class sum = k0_class(P);
    for (const auto& [n, c] : k0_class(Q).coefficients) {
      sum.coefficients[n] += c;
      if (sum.coefficients[n] == 0) sum.coefficients.erase(n);
    }
    EXPECT_EQ(k0_class(concat(P, Q)), sum);
  }
}

TEST(KTheory, Theta) {
  EXPECT_EQ(theta_map({{{0, 3}, 1}, {{}, -1}}), PicElement::iota({0, 3}));
  EXPECT_EQ(theta_map({{{0, 2}, 2}, {{}, -2}}), PicElement::identity());
  EXPECT_EQ(theta_map({}), PicElement::identity());
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 500; ++trial) {
    const FinSet J = oracle::random_set(rng, -6, 6, 4);
    const FinSet K = oracle::random_set(rng, -6, 6, 4);
    EXPECT_EQ(theta_map({{J, 3}, {K, -1}}), compose(theta_map({{J, 3}}), theta_map({{K, -1}})));
    EXPECT_EQ(theta_map({{J, 1}, {{}, -1}}), PicElement::iota(J));
  }
}
