#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "spectra/solver.hpp"

namespace spectra {

/// One (C, n, l) row: numeric energy next to the closed forms and scaled products.
struct SweepRecord {
  double C;
  unsigned n;
  unsigned l;
  double E_numeric;
  double E_k1;
  std::optional<double> E_harmonic;  // l = 0, C > 0 only
  double c2e;
  double ce;
  std::optional<double> dEdC_expect;
  bool converged;
};

/// Solves the state (n, l) at one C. E_numeric is the Richardson estimate when enabled.
SweepRecord sweep_point(unsigned l, unsigned n, double C, const SolverConfig& config);

/// Rows sorted by C (duplicates removed), computed in parallel across C.
/// Thread count is capped by SPECTRA_THREADS when set to a positive value.
std::vector<SweepRecord> run_sweep(unsigned l, unsigned n, std::span<const double> C_values,
                                   const SolverConfig& config);

/// Single-threaded reference for run_sweep.
std::vector<SweepRecord> run_sweep_serial(unsigned l, unsigned n, std::span<const double> C_values,
                                          const SolverConfig& config);

struct MonotonicityReport {
  std::size_t energy_violations;  // E not strictly increasing in C
  std::size_t c2e_violations;     // C^2 E not strictly decreasing in C

  bool ok() const { return energy_violations == 0 && c2e_violations == 0; }
};

MonotonicityReport check_monotone(std::span<const SweepRecord> rows);

/// Parsed SPECTRA_THREADS; 0 means no cap.
int thread_cap_from_env();

}  // namespace spectra
