#include "spectra/hft.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "spectra/errors.hpp"

namespace spectra {

namespace {

constexpr double kNormTolerance = 1e-10;

double screened_weight(double x) { return x > kUnderflowExponent ? 0.0 : std::exp(-x); }

struct Triple {
  std::array<Spectrum, 3> spectra;  // C - dC, C, C + dC
  bool grid_matched;
};

Triple solve_triple(const RadialProblem& problem, std::size_t state_index, double delta_C, SolverConfig config,
                    Coordinates coords, GridPolicy policy) {
  config.richardson = false;
  config.k_states = state_index + 1;
  config.scaled_threshold = coords == Coordinates::Scaled ? 0.0 : std::numeric_limits<double>::infinity();
  if (policy == GridPolicy::Shared && config.auto_domain) {
    config.grid = build_grid(problem, config.k_states, config.n_points, coords);
    config.auto_domain = false;
  }

  Triple out;
  const std::array<double, 3> offsets{-delta_C, 0.0, delta_C};
  for (std::size_t i = 0; i < 3; ++i) {
    RadialProblem shifted = problem;
    shifted.C = problem.C + offsets[i];
    out.spectra[i] = solve(shifted, config);
    if (out.spectra[i].states.size() <= state_index)
      throw DomainError("state " + std::to_string(state_index) + " is not bound at C = " +
                        std::to_string(shifted.C));
  }
  out.grid_matched = out.spectra[0].grid == out.spectra[1].grid && out.spectra[1].grid == out.spectra[2].grid;
  return out;
}

HftReport finish(HftForm form, const RadialProblem& problem, std::size_t state_index, double delta_C,
                 const Triple& triple, double expect, double minus, double plus) {
  HftReport report{form, problem.l, state_index, problem.C, delta_C, expect, 0.0, 0.0, triple.grid_matched, {}};
  report.finite_difference = (plus - minus) / (2.0 * delta_C);
  report.rel_discrepancy = std::abs(report.finite_difference - expect) / std::abs(expect);
  if (!triple.grid_matched)
    report.warnings.emplace_back("solves at C -/+ dC used different grids; the difference includes domain changes");
  return report;
}

}  // namespace

std::string_view form_name(HftForm form) { return form == HftForm::Unscaled ? "unscaled" : "scaled"; }

double expectation(std::span<const double> psi, const Grid& grid, const std::function<double(double)>& weight) {
  if (psi.size() != grid.n_points) throw DomainError("wavefunction does not match the grid");
  double norm = 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const double w = weight(grid.node(i));
    if (std::isnan(w)) throw DomainError("weight is NaN at x = " + std::to_string(grid.node(i)));
    const double p2 = psi[i] * psi[i];
    norm += p2;
    sum += p2 * w;
  }
  if (std::abs(grid.h * norm - 1.0) > kNormTolerance)
    throw DomainError("wavefunction is not normalized (h * sum psi^2 = " + std::to_string(grid.h * norm) + ")");
  return grid.h * sum;
}

double default_delta_C(double C) { return 1e-4 * std::max(1.0, C); }

HftReport check_hft_unscaled(const RadialProblem& problem, std::size_t state_index, double delta_C,
                             const SolverConfig& config, GridPolicy policy) {
  validate(problem);
  if (!(delta_C > 0.0)) throw DomainError("delta_C must be positive");
  if (problem.C - delta_C < 0.0) throw DomainError("C - delta_C must be non-negative");
  if (problem.kind.is_truncated()) throw DomainError("the Hellmann-Feynman check uses the screened potential");

  const Triple t = solve_triple(problem, state_index, delta_C, config, Coordinates::Radial, policy);
  const BoundState& centre = t.spectra[1].states[state_index];
  const double C = problem.C;
  const double expect =
      expectation(centre.psi, t.spectra[1].grid, [C](double r) { return screened_weight(C / r) / (r * r); });
  return finish(HftForm::Unscaled, problem, state_index, delta_C, t, expect,
                t.spectra[0].states[state_index].operator_eigenvalue,
                t.spectra[2].states[state_index].operator_eigenvalue);
}

HftReport check_hft_scaled(const RadialProblem& problem, std::size_t state_index, double delta_C,
                           const SolverConfig& config, GridPolicy policy) {
  validate(problem);
  if (!(delta_C > 0.0)) throw DomainError("delta_C must be positive");
  if (!(problem.C - delta_C > 0.0)) throw DomainError("scaled check needs C - delta_C > 0");
  if (problem.kind.is_truncated()) throw DomainError("the Hellmann-Feynman check uses the screened potential");

  const Triple t = solve_triple(problem, state_index, delta_C, config, Coordinates::Scaled, policy);
  const BoundState& centre = t.spectra[1].states[state_index];
  const double expect =
      -expectation(centre.psi, t.spectra[1].grid, [](double rho) { return screened_weight(1.0 / rho) / rho; });
  return finish(HftForm::Scaled, problem, state_index, delta_C, t, expect,
                t.spectra[0].states[state_index].operator_eigenvalue,
                t.spectra[2].states[state_index].operator_eigenvalue);
}

}  // namespace spectra
