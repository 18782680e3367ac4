#pragma once

#include <string_view>

namespace spectra {

enum class Formula { CoulombExact, K1Exact, HarmonicAsymptote };

std::string_view formula_name(Formula formula);

/// An energy from a closed-form expression, tagged with its origin.
struct ApproxEigenvalue {
  double value;
  Formula formula;
  unsigned n;
  unsigned l;
  unsigned nu;
  /// False when the harmonic asymptote returns a non-negative energy, i.e.
  /// C is too small for the quadratic expansion to bind state nu.
  bool within_validity = true;
};

// Quantum-number conventions. The K=1 closed form is tabulated by the
// radial node count nu = n - l - 1; the harmonic asymptote by nu = n - 1.
unsigned radial_nodes(unsigned n, unsigned l);
unsigned principal_from_nodes(unsigned nu, unsigned l);
unsigned harmonic_index(unsigned n);

/// Hydrogenic -1/(2 n^2).
double coulomb_energy(unsigned n);

/// Exact spectrum of the K=1 truncation -1/r + C/r^2:
/// E = -1/(2 (n + L - l)^2), L = -1/2 + sqrt((l + 1/2)^2 + 2C).
ApproxEigenvalue k1_energy(unsigned n, unsigned l, double C);

/// Harmonic approximation about r = C for s-states:
/// E = -1/(eC) + sqrt(1/(eC^3)) (nu + 1/2).
ApproxEigenvalue harmonic_energy(unsigned nu, double C);

struct ScaledEnergy {
  double c2e;
  double ce;
};

ScaledEnergy scaled_energy(double E, double C);

}  // namespace spectra
