#pragma once

#include <optional>
#include <string>

namespace spectra {

/// Selects the full screened Coulomb potential -exp(-C/r)/r or its Taylor
/// truncation of order K in C/r.
class PotentialKind {
 public:
  static PotentialKind screened_coulomb() { return PotentialKind{}; }
  static PotentialKind truncated(unsigned order) { return PotentialKind{order}; }

  bool is_truncated() const { return order_.has_value(); }
  /// Truncation order K; only meaningful when is_truncated().
  unsigned order() const { return order_.value_or(0); }

  /// Even K >= 2 leaves a leading -C^K/(K! r^(K+1)) term that diverges at r -> 0.
  bool unbounded_below() const { return order_ && *order_ >= 2 && *order_ % 2 == 0; }

  std::string name() const;

  friend bool operator==(const PotentialKind&, const PotentialKind&) = default;

 private:
  PotentialKind() = default;
  explicit PotentialKind(unsigned order) : order_(order) {}

  std::optional<unsigned> order_;
};

struct RadialProblem {
  unsigned l = 0;
  double C = 0.0;
  PotentialKind kind = PotentialKind::screened_coulomb();
};

/// Quadratic expansion of -exp(-C/r)/r about its minimum.
struct HarmonicExpansion {
  double r_min;
  double v_min;
  double curvature;
};

/// exp(-C/r) is flushed to exactly zero once C/r exceeds this.
inline constexpr double kUnderflowExponent = 700.0;

double eval_potential(const PotentialKind& kind, double C, double r);

/// U(r) = l(l+1)/(2r^2) + V(r).
double eval_effective(const RadialProblem& problem, double r);

/// r * U(r); tends to -1 for every l and C. Screened Coulomb only.
double tail_product(const RadialProblem& problem, double r);

HarmonicExpansion harmonic_expansion(double C);

/// Throws DomainError unless l >= 0 and C >= 0 are finite.
void validate(const RadialProblem& problem);

}  // namespace spectra
