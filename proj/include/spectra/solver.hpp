#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "spectra/potentials.hpp"
#include "spectra/tridiagonal.hpp"

namespace spectra {

/// Uniform mesh of interior nodes r_i = (i+1) h, i = 0..n_points-1.
/// psi(0) = 0 and psi(r_max) = 0 are implied by the three-point stencil.
struct Grid {
  double h = 0.0;
  std::size_t n_points = 0;

  double r_first() const { return h; }
  double r_max() const { return static_cast<double>(n_points + 1) * h; }
  double node(std::size_t i) const { return static_cast<double>(i + 1) * h; }
  /// Same outer wall, half the spacing.
  Grid refined() const { return {0.5 * h, 2 * n_points + 1}; }

  friend bool operator==(const Grid&, const Grid&) = default;
};

Grid make_grid(double r_max, std::size_t n_points);

enum class Coordinates {
  Radial,  // r, eigenvalue E
  Scaled,  // rho = r / C, eigenvalue C^2 E
};

/// -1/2 d^2/dx^2 + U on a grid: diag = 1/h^2 + U(x_i), constant offdiag = -1/(2 h^2).
struct DiscreteOperator {
  std::vector<double> diag;
  double offdiag = 0.0;
  /// U(x_i) kept separately from diag; diag = 1/h^2 + U rounds away the low bits.
  std::vector<double> potential;
  Grid grid;
  bool scaled = false;

  tridiag::SymmetricTridiagonal matrix() const;
};

struct SolverConfig {
  /// Bisection bracket width; defaults to 1e-12 * max(1, |min U|) of the operator.
  std::optional<double> eig_tol;
  std::size_t k_states = 1;
  std::size_t n_points = 16000;
  /// When false, `grid` is used as given (in the coordinates the solve selects).
  bool auto_domain = true;
  std::optional<Grid> grid;
  /// Also solve on the half-spacing grid and extrapolate (4 E_{h/2} - E_h) / 3.
  bool richardson = true;
  /// Work in rho = r/C once C reaches this value.
  double scaled_threshold = 10.0;
};

struct BoundState {
  /// Energy in Hartree on the solve grid (E = eps / C^2 in scaled mode).
  double E;
  /// Raw eigenvalue of the discrete operator (eps in scaled mode).
  double operator_eigenvalue;
  std::size_t nodes;
  /// Normalized so that h * sum psi_i^2 = 1 on the spectrum's grid.
  std::vector<double> psi;
  bool converged;
  std::optional<double> richardson_estimate;

  double best_energy() const { return richardson_estimate.value_or(E); }
};

struct Spectrum {
  std::vector<BoundState> states;
  Grid grid;
  RadialProblem problem;
  bool scaled = false;
  double eig_tol = 0.0;
};

/// States at or above this energy are finite-box artifacts, not bound states.
inline constexpr double kBoundCutoff = -1e-12;

Coordinates choose_coordinates(const RadialProblem& problem, const SolverConfig& config);

/// Sizes the outer wall so the k_states-th state has decayed to roundoff.
Grid build_grid(const RadialProblem& problem, std::size_t k_states, std::size_t n_points,
                Coordinates coords = Coordinates::Radial);

DiscreteOperator discretize(const RadialProblem& problem, const Grid& grid, bool scaled);

double default_eig_tol(const DiscreteOperator& op);

/// k smallest eigenvalues by Sturm bisection.
std::vector<double> eigen_lowest(const DiscreteOperator& op, std::size_t k, double tol);

/// Inverse-iteration eigenvector normalized as h * sum psi^2 = 1.
std::vector<double> eigenvector(const DiscreteOperator& op, double E, double tol);

/// <psi|op|psi> / <psi|psi>, with the kinetic part summed as squared differences.
double rayleigh_quotient(const DiscreteOperator& op, std::span<const double> psi);

/// Sign changes among the significant components of psi.
std::size_t count_nodes(std::span<const double> psi);

Spectrum solve(const RadialProblem& problem, const SolverConfig& config = {});

}  // namespace spectra
