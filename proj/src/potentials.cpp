#include "spectra/potentials.hpp"

#include <cmath>
#include <numbers>

#include "spectra/errors.hpp"

namespace spectra {

namespace {

void require_positive_radius(double r) {
  if (!(r > 0.0)) throw DomainError("radius must be positive, got " + std::to_string(r));
}

double screened_factor(double x) {
  return x > kUnderflowExponent ? 0.0 : std::exp(-x);
}

}  // namespace

std::string PotentialKind::name() const {
  if (!is_truncated()) return "screened";
  return "truncated-" + std::to_string(order());
}

double eval_potential(const PotentialKind& kind, double C, double r) {
  require_positive_radius(r);
  if (!(C >= 0.0)) throw DomainError("screening parameter must be non-negative");
  const double x = C / r;
  if (!kind.is_truncated()) return -screened_factor(x) / r;

  // Horner form of sum_{j<=K} (-x)^j / j!
  double sum = 1.0;
  for (unsigned j = kind.order(); j >= 1; --j) sum = 1.0 - sum * x / j;
  return -sum / r;
}

double eval_effective(const RadialProblem& problem, double r) {
  require_positive_radius(r);
  const double l = problem.l;
  return l * (l + 1.0) / (2.0 * r * r) + eval_potential(problem.kind, problem.C, r);
}

double tail_product(const RadialProblem& problem, double r) {
  if (problem.kind.is_truncated()) throw DomainError("tail_product is defined for the screened potential");
  require_positive_radius(r);
  const double l = problem.l;
  // r*U expanded by hand so the r -> infinity limit is exact for l = 0, C = 0.
  return l * (l + 1.0) / (2.0 * r) - screened_factor(problem.C / r);
}

HarmonicExpansion harmonic_expansion(double C) {
  if (!(C > 0.0)) throw DomainError("harmonic expansion needs C > 0");
  const double e = std::numbers::e;
  return {C, -1.0 / (e * C), 1.0 / (e * C * C * C)};
}

void validate(const RadialProblem& problem) {
  if (!std::isfinite(problem.C) || problem.C < 0.0)
    throw DomainError("screening parameter C must be finite and non-negative");
}

}  // namespace spectra
