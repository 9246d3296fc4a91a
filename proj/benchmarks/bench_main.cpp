#include <benchmark/benchmark.h>

#include <random>

#include "weylgraded/classification.hpp"
#include "weylgraded/gwa_rings.hpp"
#include "weylgraded/k_theory.hpp"
#include "weylgraded/necklace.hpp"
#include "weylgraded/picard.hpp"
#include "weylgraded/polynomial.hpp"

using namespace weylgraded;

namespace {

PicElement random_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<Int> value(-6, 6);
  std::vector<Int> items;
  for (int k = 0; k < 5; ++k) items.push_back(value(rng));
  return PicElement{value(rng) % 2 == 0 ? 1 : -1, value(rng), FinSet(std::move(items))};
}

void BM_NecklaceEnumerate(benchmark::State& state) {
  const Int n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(necklace_enumerate(n));
}
BENCHMARK(BM_NecklaceEnumerate)->Arg(8)->Arg(12)->Arg(16);

void BM_PicCompose(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const PicElement F = random_element(rng);
  const PicElement G = random_element(rng);
  for (auto _ : state) benchmark::DoNotOptimize(compose(F, G));
}
BENCHMARK(BM_PicCompose);

void BM_CanonicalAdmissible(benchmark::State& state) {
  const PicElement F{1, 5, FinSet{-4, -1, 2, 7}};
  for (auto _ : state) benchmark::DoNotOptimize(canonical_admissible(F));
}
BENCHMARK(BM_CanonicalAdmissible);

void BM_RingPiecesOracle(benchmark::State& state) {
  const Int n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(ring_pieces_oracle(FinSet{0}, n, -3, 3));
}
BENCHMARK(BM_RingPiecesOracle)->Arg(1)->Arg(3);

void BM_PolynomialGcd(benchmark::State& state) {
  const Polynomial p = Polynomial::rising(0, 8) * Polynomial::linear(Rational(1, 2));
  const Polynomial q = Polynomial::rising(4, 12);
  for (auto _ : state) benchmark::DoNotOptimize(gcd(p, q));
}
BENCHMARK(BM_PolynomialGcd);

void BM_NormalizeSum(benchmark::State& state) {
  ProjectiveSum sum;
  for (Int k = 0; k < 6; ++k) sum.push_back({FinSet{k, k + 2, -k}, k - 3});
  for (auto _ : state) benchmark::DoNotOptimize(normalize_sum(sum));
}
BENCHMARK(BM_NormalizeSum);

}  // namespace
BENCHMARK_MAIN();
