#include <benchmark/benchmark.h>

#include <random>

#include "borelgin/gin.hpp"
#include "borelgin/groebner.hpp"
#include "borelgin/parser.hpp"

using namespace borelgin;

namespace {

Ideal space_curve(const Field& field) {
  const std::vector<std::string> v{"x1", "x2", "x3", "x4"};
  Ideal i{Ring{4, field}, {}};
  for (const char* g : {"x3^3 - x1*x4^2", "x1^2*x3^2 - x2^3*x4", "x2^3*x3 - x1^3*x4", "x2^6 - x1^5*x3"}) {
    i.generators.push_back(parse_polynomial(g, v, field));
  }
  return i;
}

Ideal imn(unsigned m) {
  const std::vector<std::string> v{"x", "y", "z", "t"};
  const std::string ms = std::to_string(m);
  Ideal i{Ring{4, Field::prime()}, {}};
  i.generators.push_back(parse_polynomial("x^" + ms + "*t - y^" + ms + "*z", v, Field::prime()));
  i.generators.push_back(
      parse_polynomial("z^" + std::to_string(m + 2) + " - x*t^" + std::to_string(m + 1), v, Field::prime()));
  return i;
}

void BM_BuchbergerSpaceCurve(benchmark::State& state) {
  Ideal i = space_curve(Field::prime());
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(i));
}
BENCHMARK(BM_BuchbergerSpaceCurve);

void BM_BuchbergerSpaceCurveRational(benchmark::State& state) {
  Ideal i = space_curve(Field::rationals());
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(i));
}
BENCHMARK(BM_BuchbergerSpaceCurveRational);

void BM_BuchbergerRandomQuadrics(benchmark::State& state) {
  std::mt19937_64 rng(1);
  Ring r{static_cast<int>(state.range(0)), Field::prime()};
  Ideal i{r, {}};
  for (int k = 0; k < 3; ++k) i.generators.push_back(random_form(r, 2, rng));
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(i));
}
BENCHMARK(BM_BuchbergerRandomQuadrics)->Arg(4)->Arg(5)->Arg(6);

void BM_GinSpaceCurve(benchmark::State& state) {
  Ideal i = space_curve(Field::prime());
  for (auto _ : state) benchmark::DoNotOptimize(gin(i));
}
BENCHMARK(BM_GinSpaceCurve)->Unit(benchmark::kMillisecond);

void BM_GinChardinDCruz(benchmark::State& state) {
  Ideal i = imn(static_cast<unsigned>(state.range(0)));
  GinOptions o;
  o.trials = 2;
  for (auto _ : state) benchmark::DoNotOptimize(gin(i, MonomialOrder::degrevlex(), o));
}
BENCHMARK(BM_GinChardinDCruz)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
