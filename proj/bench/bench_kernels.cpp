#include <benchmark/benchmark.h>

#include <vector>

#include "spectra/solver.hpp"
#include "spectra/sweep.hpp"
#include "spectra/tridiagonal.hpp"

namespace {

using spectra::PotentialKind;
using spectra::RadialProblem;

spectra::tridiag::SymmetricTridiagonal hydrogen_matrix(std::size_t n) {
  const RadialProblem p{0, 0.1, PotentialKind::screened_coulomb()};
  return spectra::discretize(p, spectra::build_grid(p, 8, n), false).matrix();
}

void BM_LowestEigenvalues(benchmark::State& state) {
  const auto t = hydrogen_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(spectra::tridiag::lowest_eigenvalues(t, 8, 1e-12));
}

void BM_LowestEigenvaluesSerial(benchmark::State& state) {
  const auto t = hydrogen_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(spectra::tridiag::lowest_eigenvalues_serial(t, 8, 1e-12));
}

const std::vector<double> kSweepC{0.01, 0.05, 0.1, 0.2, 0.5, 1.0, 2.0, 5.0};

void BM_Sweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(spectra::run_sweep(0, 1, kSweepC, {}));
}

void BM_SweepSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(spectra::run_sweep_serial(0, 1, kSweepC, {}));
}

void BM_Solve(benchmark::State& state) {
  const RadialProblem p{0, 0.1, PotentialKind::screened_coulomb()};
  spectra::SolverConfig c;
  c.n_points = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spectra::solve(p, c));
}

}  // namespace

BENCHMARK(BM_LowestEigenvalues)->Arg(4000)->Arg(16000)->Arg(64000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LowestEigenvaluesSerial)->Arg(4000)->Arg(16000)->Arg(64000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Solve)->Arg(16000)->Arg(64000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
