#include <benchmark/benchmark.h>

#include <vector>

#include "fex/alpha.hpp"
#include "fex/certificates.hpp"
#include "fex/extension.hpp"
#include "fex/peak.hpp"
#include "fex/random.hpp"
#include "fex/spectral.hpp"

namespace {

fex::ExtensionOperator canonical(const fex::GroupSpec& g, const fex::PointSet& k) {
  const auto peak = fex::build_peak(g, fex::greedy_base_set(g, fex::difference_set(g, k)));
  return fex::canonical_operator(g, k, peak);
}

fex::PointSet first_points(const fex::GroupSpec& g, std::size_t n) {
  std::vector<fex::ElementIndex> idx;
  for (std::size_t i = 0; i < n; ++i) idx.push_back(i);
  return fex::PointSet(g, idx);
}

void BM_Synthesize(benchmark::State& state) {
  const fex::GroupSpec g({state.range(0)});
  fex::Rng rng(1);
  std::vector<fex::Complex> v(g.order());
  for (auto& z : v) z = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  const fex::GroupFunction f(g, fex::Side::time, v);
  for (auto _ : state) benchmark::DoNotOptimize(fex::synthesize(f));
}
BENCHMARK(BM_Synthesize)->Arg(16)->Arg(64)->Arg(256);

void BM_NormCertified(benchmark::State& state) {
  const fex::GroupSpec g({16});
  const auto op = canonical(g, first_points(g, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(fex::norm_certified(op, static_cast<std::size_t>(state.range(1))));
}
BENCHMARK(BM_NormCertified)->Args({2, 32})->Args({3, 32})->Args({4, 32})->Args({5, 16});

void BM_KhinchinAverage(benchmark::State& state) {
  fex::Rng rng(2);
  std::vector<fex::Complex> a(static_cast<std::size_t>(state.range(0)));
  for (auto& z : a) z = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  for (auto _ : state) benchmark::DoNotOptimize(fex::khinchin_average(a));
}
BENCHMARK(BM_KhinchinAverage)->Arg(8)->Arg(14)->Arg(20);

void BM_OptimizeAlpha(benchmark::State& state) {
  const fex::GroupSpec g({16});
  const auto k = first_points(g, static_cast<std::size_t>(state.range(0)));
  const auto peak = fex::build_peak(g, fex::greedy_base_set(g, fex::difference_set(g, k)));
  fex::AlphaOptions options;
  options.budget = 200;
  for (auto _ : state) benchmark::DoNotOptimize(fex::optimize_alpha(g, k, peak, options));
}
BENCHMARK(BM_OptimizeAlpha)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
