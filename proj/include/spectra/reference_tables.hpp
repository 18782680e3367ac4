#pragma once

#include <span>
#include <string_view>

namespace spectra::reference {

/// Published K=1 closed-form energies at C = 0.1, indexed by radial nodes nu and l,
/// three significant figures. Literals are kept exactly as printed.
struct K1Entry {
  unsigned nu;
  unsigned l;
  std::string_view printed;
};

inline constexpr double kK1TableC = 0.1;

/// Published harmonic-asymptote energies for s-states, mantissa(exponent) literals
/// with 2 to 5 significant figures.
struct HarmonicEntry {
  double C;
  unsigned nu;
  std::string_view printed;
};

std::span<const K1Entry> k1_table();
std::span<const HarmonicEntry> harmonic_table();

}  // namespace spectra::reference
