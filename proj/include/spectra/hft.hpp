#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "spectra/potentials.hpp"
#include "spectra/solver.hpp"

namespace spectra {

enum class HftForm {
  Unscaled,  // dE/dC = <exp(-C/r)/r^2>
  Scaled,    // d(C^2 E)/dC = -<exp(-1/rho)/rho>
};

enum class GridPolicy {
  Shared,    // one grid for the C - dC, C, C + dC solves
  PerSolve,  // each solve sizes its own domain (derivatives pick up domain jitter)
};

/// Hellmann-Feynman comparison for one state: the expectation of dH/dC against a
/// central difference of the discrete eigenvalue.
struct HftReport {
  HftForm form;
  unsigned l;
  std::size_t state_index;
  double C;
  double delta_C;
  /// <exp(-C/r)/r^2> (Unscaled) or -<exp(-1/rho)/rho> (Scaled).
  double expectation;
  /// Central difference of E (Unscaled) or of C^2 E (Scaled).
  double finite_difference;
  double rel_discrepancy;
  bool grid_matched;
  std::vector<std::string> warnings;
};

std::string_view form_name(HftForm form);

/// h * sum psi_i^2 weight(x_i). psi must satisfy h * sum psi_i^2 = 1 to 1e-10.
double expectation(std::span<const double> psi, const Grid& grid, const std::function<double(double)>& weight);

/// 1e-4 * max(1, C).
double default_delta_C(double C);

HftReport check_hft_unscaled(const RadialProblem& problem, std::size_t state_index, double delta_C,
                             const SolverConfig& config = {}, GridPolicy policy = GridPolicy::Shared);

HftReport check_hft_scaled(const RadialProblem& problem, std::size_t state_index, double delta_C,
                           const SolverConfig& config = {}, GridPolicy policy = GridPolicy::Shared);

}  // namespace spectra
