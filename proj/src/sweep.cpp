#include "spectra/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "spectra/analytic.hpp"
#include "spectra/errors.hpp"
#include "spectra/hft.hpp"

namespace spectra {

namespace {

std::vector<double> sorted_unique(std::span<const double> values) {
  std::vector<double> out(values.begin(), values.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double dEdC_weight(double C, double x, bool scaled) {
  // <exp(-C/r)/r^2> is coordinate free; in rho units r = C rho.
  const double r = scaled ? C * x : x;
  const double e = C / r;
  return (e > kUnderflowExponent ? 0.0 : std::exp(-e)) / (r * r);
}

}  // namespace

SweepRecord sweep_point(unsigned l, unsigned n, double C, const SolverConfig& config) {
  const unsigned nu = radial_nodes(n, l);
  RadialProblem problem{l, C, PotentialKind::screened_coulomb()};
  SolverConfig local = config;
  local.k_states = nu + 1;
  const Spectrum spectrum = solve(problem, local);
  if (spectrum.states.size() <= nu)
    throw DomainError("state n=" + std::to_string(n) + " l=" + std::to_string(l) + " not bound at C=" +
                      std::to_string(C));

  const BoundState& state = spectrum.states[nu];
  SweepRecord row{};
  row.C = C;
  row.n = n;
  row.l = l;
  row.E_numeric = state.best_energy();
  row.E_k1 = k1_energy(n, l, C).value;
  if (l == 0 && C > 0.0) row.E_harmonic = harmonic_energy(harmonic_index(n), C).value;
  const ScaledEnergy scaled = scaled_energy(row.E_numeric, C);
  row.c2e = scaled.c2e;
  row.ce = scaled.ce;
  const bool in_rho = spectrum.scaled;
  row.dEdC_expect =
      expectation(state.psi, spectrum.grid, [C, in_rho](double x) { return dEdC_weight(C, x, in_rho); });
  row.converged = state.converged;
  return row;
}

std::vector<SweepRecord> run_sweep(unsigned l, unsigned n, std::span<const double> C_values,
                                   const SolverConfig& config) {
  const std::vector<double> Cs = sorted_unique(C_values);
  std::vector<SweepRecord> rows(Cs.size());
  const int cap = thread_cap_from_env();
  const int threads = cap > 0 ? cap : omp_get_max_threads();
  std::exception_ptr failure;
  const auto count = static_cast<long>(Cs.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long i = 0; i < count; ++i) {
    try {
      rows[i] = sweep_point(l, n, Cs[i], config);
    } catch (...) {
#pragma omp critical(spectra_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::vector<SweepRecord> run_sweep_serial(unsigned l, unsigned n, std::span<const double> C_values,
                                          const SolverConfig& config) {
  std::vector<SweepRecord> rows;
  for (double C : sorted_unique(C_values)) rows.push_back(sweep_point(l, n, C, config));
  return rows;
}

MonotonicityReport check_monotone(std::span<const SweepRecord> rows) {
  MonotonicityReport report{0, 0};
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i].E_numeric > rows[i - 1].E_numeric)) ++report.energy_violations;
    if (!(rows[i].c2e < rows[i - 1].c2e)) ++report.c2e_violations;
  }
  return report;
}

int thread_cap_from_env() {
  const char* raw = std::getenv("SPECTRA_THREADS");
  if (raw == nullptr) return 0;
  int value = 0;
  const char* end = raw + std::strlen(raw);
  const auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value < 0) return 0;
  return value;
}

}  // namespace spectra
