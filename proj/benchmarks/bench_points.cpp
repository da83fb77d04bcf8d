#include <benchmark/benchmark.h>

#include <random>

#include "borelgin/gin.hpp"
#include "borelgin/points.hpp"

using namespace borelgin;

namespace {

void BM_BuchbergerMoller(benchmark::State& state) {
  PointSet p = random_points(4, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger_moller(p));
}
BENCHMARK(BM_BuchbergerMoller)->Arg(10)->Arg(30)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_PointsOnQuadric(benchmark::State& state) {
  Ring r{4, Field::prime()};
  std::mt19937_64 rng(2);
  Polynomial q = random_form(r, 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(points_on_hypersurface(q, 81, 3));
}
BENCHMARK(BM_PointsOnQuadric)->Unit(benchmark::kMillisecond);

void BM_CompleteIntersection(benchmark::State& state) {
  Ring r{4, Field::prime()};
  for (auto _ : state) benchmark::DoNotOptimize(complete_intersection(r, {4, 4, 4}, 21));
}
BENCHMARK(BM_CompleteIntersection)->Unit(benchmark::kMillisecond);

}  // namespace
