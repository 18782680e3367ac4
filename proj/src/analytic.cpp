#include "spectra/analytic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spectra/errors.hpp"

namespace spectra {

std::string_view formula_name(Formula formula) {
  switch (formula) {
    case Formula::CoulombExact: return "coulomb";
    case Formula::K1Exact: return "k1";
    case Formula::HarmonicAsymptote: return "harmonic";
  }
  return "unknown";
}

unsigned radial_nodes(unsigned n, unsigned l) {
  if (n <= l) throw DomainError("need n > l, got n=" + std::to_string(n) + " l=" + std::to_string(l));
  return n - l - 1;
}

unsigned principal_from_nodes(unsigned nu, unsigned l) { return nu + l + 1; }

unsigned harmonic_index(unsigned n) {
  if (n < 1) throw DomainError("principal quantum number must be >= 1");
  return n - 1;
}

double coulomb_energy(unsigned n) {
  if (n < 1) throw DomainError("principal quantum number must be >= 1");
  const double nn = n;
  return -1.0 / (2.0 * nn * nn);
}

ApproxEigenvalue k1_energy(unsigned n, unsigned l, double C) {
  const unsigned nu = radial_nodes(n, l);
  if (!(C >= 0.0)) throw DomainError("screening parameter must be non-negative");
  const double half_l = l + 0.5;
  const double L = -0.5 + std::sqrt(half_l * half_l + 2.0 * C);
  const double denom = n + L - l;
  return {-1.0 / (2.0 * denom * denom), Formula::K1Exact, n, l, nu};
}

ApproxEigenvalue harmonic_energy(unsigned nu, double C) {
  if (!(C > 0.0)) throw DomainError("harmonic asymptote needs C > 0");
  const double eC = std::numbers::e * C;
  const double value = -1.0 / eC + std::sqrt(1.0 / (eC * C * C)) * (nu + 0.5);
  return {value, Formula::HarmonicAsymptote, nu + 1, 0, nu, value < 0.0};
}

ScaledEnergy scaled_energy(double E, double C) { return {C * C * E, C * E}; }

}  // namespace spectra
