#include <benchmark/benchmark.h>

#include "gcfiber/fiber_build.hpp"
#include "gcfiber/fixtures.hpp"
#include "gcfiber/gc_map.hpp"
#include "gcfiber/symplectic_check.hpp"

namespace {

using namespace gcfiber;

Spectrum generic_spectrum(int n) {
  std::vector<double> v;
  for (int i = n; i >= 1; --i) v.push_back(i);
  return Spectrum(v);
}

void BM_EigHermitian(benchmark::State& state) {
  const auto a = random_orbit_point(generic_spectrum(static_cast<int>(state.range(0))), RandomSeed{1});
  for (auto _ : state) benchmark::DoNotOptimize(eig_hermitian(a));
}
BENCHMARK(BM_EigHermitian)->DenseRange(2, 8, 2);

void BM_MomentumMap(benchmark::State& state) {
  const auto a = random_orbit_point(generic_spectrum(static_cast<int>(state.range(0))), RandomSeed{2});
  for (auto _ : state) benchmark::DoNotOptimize(momentum_map(a));
}
BENCHMARK(BM_MomentumMap)->DenseRange(2, 8, 2);

void BM_BorderedExtension(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::vector<double> source, target;
  for (int i = k; i >= 1; --i) source.push_back(i + 0.5);
  for (int i = k + 1; i >= 1; --i) target.push_back(i);
  const auto a_k = random_orbit_point(Spectrum(source), RandomSeed{3});
  const Spectrum t(target);
  for (auto _ : state) benchmark::DoNotOptimize(bordered_extension(a_k, t));
}
BENCHMARK(BM_BorderedExtension)->DenseRange(1, 7, 2);

void BM_FiberStep(benchmark::State& state) {
  const auto f = overlapping_diamonds_fixture();
  auto a = base_point(f.triangle, RandomSeed{4});
  std::mt19937_64 engine(4);
  int k = 1;
  for (auto _ : state) {
    a = fiber_step(a, k, engine);
    k = k % 7 + 1;
  }
}
BENCHMARK(BM_FiberStep);

void BM_FullReport(benchmark::State& state) {
  const auto f = state.range(0) == 3 ? spherical_fixture() : overlapping_diamonds_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(full_report(f.triangle, 1, {}, RandomSeed{5}));
}
BENCHMARK(BM_FullReport)->Arg(3)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
