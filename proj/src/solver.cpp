#include "spectra/solver.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <string>

#include "spectra/analytic.hpp"
#include "spectra/errors.hpp"

namespace spectra {

namespace {

constexpr std::size_t kMinGridPoints = 16;
// e^-40 ~ 4e-18: the slowest requested state is negligible past the turning point plus this many decay lengths.
constexpr double kDecayLengths = 40.0;
constexpr double kHarmonicWindow = 8.0;
constexpr double kNodeFraction = 1e-8;
constexpr double kDefaultRelTol = 1e-12;
// Richardson corrections above this fraction of |E| mean the grid is too coarse.
constexpr double kRichardsonRelTol = 1e-4;

struct Eigenpair {
  double value;
  std::vector<double> psi;
};

double radial_extent(const RadialProblem& problem, std::size_t k_states) {
  const unsigned l = problem.l;
  const unsigned n_top = l + static_cast<unsigned>(k_states);
  const double hydrogenic = std::max(40.0, 10.0 * n_top * static_cast<double>(n_top));

  // The screened potential lies below -1/r + C/r^2, so the K=1 energy bounds the
  // true one from above and its decay length from above.
  const bool coulomb_only = problem.kind.is_truncated() && problem.kind.order() == 0;
  const double C = coulomb_only ? 0.0 : problem.C;
  const double E = k1_energy(n_top, l, C).value;
  const double kappa = std::sqrt(-2.0 * E);
  const double barrier = l * (l + 1.0) + 2.0 * C;
  const double turn = (1.0 + std::sqrt(std::max(0.0, 1.0 + 2.0 * E * barrier))) / (-2.0 * E);
  return std::max(hydrogenic, turn + kDecayLengths / kappa);
}

std::vector<Eigenpair> extract(const DiscreteOperator& op, std::size_t k, double tol) {
  const std::vector<double> values = eigen_lowest(op, k, tol);
  const auto t = op.matrix();
  const auto box = tridiag::gershgorin(t);
  const double roundoff = 64.0 * std::numeric_limits<double>::epsilon() *
                          std::max(std::abs(box.lower), std::abs(box.upper));
  std::vector<Eigenpair> pairs(values.size());
  const auto count = static_cast<long>(values.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (long j = 0; j < count; ++j) {
    try {
      std::vector<double> v = tridiag::inverse_iteration(t, values[j], tol);
      const double scale = 1.0 / std::sqrt(op.grid.h);
      for (double& x : v) x *= scale;
      // The quotient is second-order accurate in psi; only trust it near the bisection value.
      const double rq = rayleigh_quotient(op, v);
      const double refined = std::abs(rq - values[j]) <= std::max(100.0 * tol, roundoff) ? rq : values[j];
      pairs[j] = {refined, std::move(v)};
    } catch (...) {
#pragma omp critical(spectra_extract_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return pairs;
}

}  // namespace

Grid make_grid(double r_max, std::size_t n_points) {
  if (!(r_max > 0.0) || n_points == 0) throw ConfigurationError("grid needs r_max > 0 and at least one node");
  return {r_max / static_cast<double>(n_points + 1), n_points};
}

tridiag::SymmetricTridiagonal DiscreteOperator::matrix() const {
  return {diag, std::vector<double>(diag.empty() ? 0 : diag.size() - 1, offdiag)};
}

Coordinates choose_coordinates(const RadialProblem& problem, const SolverConfig& config) {
  return problem.C > 0.0 && problem.C >= config.scaled_threshold ? Coordinates::Scaled : Coordinates::Radial;
}

Grid build_grid(const RadialProblem& problem, std::size_t k_states, std::size_t n_points, Coordinates coords) {
  if (n_points < kMinGridPoints)
    throw ConfigurationError("grid needs at least " + std::to_string(kMinGridPoints) + " points, got " +
                             std::to_string(n_points));
  if (k_states < 1) throw ConfigurationError("k_states must be >= 1");
  validate(problem);
  double extent = radial_extent(problem, k_states);
  if (coords == Coordinates::Scaled) {
    if (!(problem.C > 0.0)) throw DomainError("scaled coordinates need C > 0");
    // Harmonic turning point of state k about rho = 1, in rho units.
    const double x_turn = std::sqrt(2.0 * static_cast<double>(k_states) + 1.0) *
                          std::pow(std::numbers::e / problem.C, 0.25);
    extent = std::max(extent / problem.C, 1.0 + kHarmonicWindow * x_turn);
  }
  return make_grid(extent, n_points);
}

DiscreteOperator discretize(const RadialProblem& problem, const Grid& grid, bool scaled) {
  validate(problem);
  if (problem.kind.unbounded_below())
    throw UnboundedPotentialError(problem.kind.name() + " is unbounded below; no ground state exists");
  if (scaled && !(problem.C > 0.0)) throw DomainError("scaled operator needs C > 0");
  if (grid.n_points == 0 || !(grid.h > 0.0)) throw ConfigurationError("empty grid");

  DiscreteOperator op;
  op.grid = grid;
  op.scaled = scaled;
  const double kinetic = 1.0 / (grid.h * grid.h);
  op.offdiag = -0.5 * kinetic;
  op.potential.resize(grid.n_points);
  op.diag.resize(grid.n_points);
  const double l = problem.l;
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    const double x = grid.node(i);
    // C^2 V(C rho) = C * V_{C=1}(rho) for every member of the family.
    const double u = scaled ? l * (l + 1.0) / (2.0 * x * x) + problem.C * eval_potential(problem.kind, 1.0, x)
                            : eval_effective(problem, x);
    op.potential[i] = u;
    op.diag[i] = kinetic + u;
  }
  return op;
}

double default_eig_tol(const DiscreteOperator& op) {
  double deepest = 0.0;
  for (double u : op.potential) deepest = std::min(deepest, u);
  return kDefaultRelTol * std::max(1.0, std::abs(deepest));
}

std::vector<double> eigen_lowest(const DiscreteOperator& op, std::size_t k, double tol) {
  return tridiag::lowest_eigenvalues(op.matrix(), k, tol);
}

std::vector<double> eigenvector(const DiscreteOperator& op, double E, double tol) {
  std::vector<double> v = tridiag::inverse_iteration(op.matrix(), E, tol);
  const double scale = 1.0 / std::sqrt(op.grid.h);
  for (double& x : v) x *= scale;
  return v;
}

double rayleigh_quotient(const DiscreteOperator& op, std::span<const double> psi) {
  const double h = op.grid.h;
  double gradient = 0.0;
  double potential = 0.0;
  double norm = 0.0;
  double previous = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const double d = psi[i] - previous;
    gradient += d * d;
    potential += op.potential[i] * psi[i] * psi[i];
    norm += psi[i] * psi[i];
    previous = psi[i];
  }
  gradient += previous * previous;
  return (gradient / (2.0 * h * h) + potential) / norm;
}

std::size_t count_nodes(std::span<const double> psi) {
  double peak = 0.0;
  for (double v : psi) peak = std::max(peak, std::abs(v));
  const double floor = kNodeFraction * peak;
  std::size_t nodes = 0;
  int sign = 0;
  for (double v : psi) {
    if (std::abs(v) <= floor) continue;
    const int s = v > 0.0 ? 1 : -1;
    if (sign != 0 && s != sign) ++nodes;
    sign = s;
  }
  return nodes;
}

Spectrum solve(const RadialProblem& problem, const SolverConfig& config) {
  validate(problem);
  if (problem.kind.unbounded_below())
    throw UnboundedPotentialError(problem.kind.name() + " is unbounded below; no ground state exists");
  if (config.k_states < 1) throw ConfigurationError("k_states must be >= 1");
  if (config.eig_tol && !(*config.eig_tol > 0.0)) throw ConfigurationError("eig_tol must be positive");

  const Coordinates coords = choose_coordinates(problem, config);
  const bool scaled = coords == Coordinates::Scaled;
  Grid grid;
  if (config.auto_domain) {
    grid = build_grid(problem, config.k_states, config.n_points, coords);
  } else {
    if (!config.grid) throw ConfigurationError("auto_domain is off but no grid was supplied");
    grid = *config.grid;
  }

  const DiscreteOperator op = discretize(problem, grid, scaled);
  const double tol = config.eig_tol.value_or(default_eig_tol(op));
  const std::size_t k = std::min(config.k_states, grid.n_points);
  std::vector<Eigenpair> base = extract(op, k, tol);

  std::vector<Eigenpair> fine;
  if (config.richardson) fine = extract(discretize(problem, grid.refined(), scaled), k, tol);

  const double to_energy = scaled ? 1.0 / (problem.C * problem.C) : 1.0;
  Spectrum spectrum{{}, grid, problem, scaled, tol};
  for (std::size_t i = 0; i < base.size(); ++i) {
    const double E = base[i].value * to_energy;
    if (E >= kBoundCutoff) break;
    BoundState state{E, base[i].value, count_nodes(base[i].psi), std::move(base[i].psi), true, std::nullopt};
    if (config.richardson) {
      const double extrapolated = (4.0 * fine[i].value - base[i].value) / 3.0;
      const double correction = std::abs(extrapolated - fine[i].value);
      state.richardson_estimate = extrapolated * to_energy;
      state.converged = correction <= std::max(1e3 * tol, kRichardsonRelTol * std::abs(base[i].value));
    }
    spectrum.states.push_back(std::move(state));
  }
  return spectrum;
}

}  // namespace spectra
