#pragma once

#include <cstddef>

#include "spectra/potentials.hpp"
#include "spectra/solver.hpp"

namespace spectra {

struct EnergyBracket {
  double lower;
  double upper;
};

/// Number of eigenvalues below E of the radial problem on [0, grid.r_max()], from
/// Numerov integration outward from the origin and inward from the wall, matched at
/// the outer classical turning point. Shares no code with the matrix solver.
std::size_t shooting_count(const RadialProblem& problem, const Grid& grid, double E);

/// Eigenvalue with `nodes_target` radial nodes, by bisection on shooting_count.
/// The bracket must hold exactly that eigenvalue: counts nodes_target at the lower
/// end and nodes_target + 1 at the upper end, otherwise BracketError.
/// Supports the screened potential and the K = 0, 1 truncations.
double shoot_eigenvalue(const RadialProblem& problem, const Grid& grid, std::size_t nodes_target,
                        EnergyBracket bracket, double width = 1e-10);

}  // namespace spectra
