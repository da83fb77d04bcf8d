#include <benchmark/benchmark.h>

#include <random>

#include "borelgin/hilbert.hpp"
#include "borelgin/monomial_ideal.hpp"

using namespace borelgin;

namespace {

MonomialIdeal power_of_maximal(int n, unsigned d) { return MonomialIdeal(n, monomials_of_degree(n, d)); }

MonomialIdeal random_monomials(int n, int count, unsigned max_degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> e(0, max_degree);
  std::vector<Monomial> gens;
  for (int k = 0; k < count; ++k) {
    std::vector<unsigned> ex(static_cast<std::size_t>(n));
    for (unsigned& x : ex) x = e(rng);
    gens.emplace_back(n, ex);
  }
  return MonomialIdeal(n, gens);
}

void BM_HilbertSeriesMaximalPower(benchmark::State& state) {
  MonomialIdeal i = power_of_maximal(static_cast<int>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_series(i));
}
BENCHMARK(BM_HilbertSeriesMaximalPower)->DenseRange(3, 6);

void BM_HilbertSeriesRandomMonomials(benchmark::State& state) {
  MonomialIdeal i = random_monomials(6, static_cast<int>(state.range(0)), 5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_series(i));
}
BENCHMARK(BM_HilbertSeriesRandomMonomials)->Arg(10)->Arg(40)->Arg(160);

void BM_MacaulayBound(benchmark::State& state) {
  for (auto _ : state) {
    long long total = 0;
    for (long long h = 0; h < 500; ++h) total += macaulay_growth_bound(h, 7);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_MacaulayBound);

void BM_EliahouKervaire(benchmark::State& state) {
  MonomialIdeal i = power_of_maximal(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(eliahou_kervaire(i));
}
BENCHMARK(BM_EliahouKervaire)->DenseRange(3, 6);

}  // namespace
