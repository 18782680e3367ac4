#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spectra/errors.hpp"
#include "spectra/hft.hpp"
#include "spectra/solver.hpp"

using namespace spectra;

namespace {

RadialProblem screened(unsigned l, double C) { return {l, C, PotentialKind::screened_coulomb()}; }

// Adaptive Simpson on [a, b].
template <class F>
double simpson(F f, double a, double b, double fa, double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol) return left + right + (left + right - whole) / 15.0;
  return simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) + simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

template <class F>
double integrate(F f, double a, double b) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  return simpson(f, a, b, fa, fm, fb, (b - a) / 6.0 * (fa + 4.0 * fm + fb), 1e-13, 50);
}

}  // namespace

TEST_SUITE("hft") {

TEST_CASE("expectation of hydrogen 1s") {
  SolverConfig c;
  c.richardson = false;
  const Spectrum s = solve(screened(0, 0.0), c);
  const auto& psi = s.states[0].psi;
  // <1/r> = 1, <1/r^2> = 2 for u = 2 r exp(-r).
  CHECK(expectation(psi, s.grid, [](double r) { return 1.0 / r; }) == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(expectation(psi, s.grid, [](double r) { return 1.0 / (r * r); }) == doctest::Approx(2.0).epsilon(5e-3));
  CHECK(expectation(psi, s.grid, [](double) { return 1.0; }) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("expectation of the screening weight against quadrature") {
  for (double C : {0.1, 1.0}) {
    SolverConfig c;
    c.richardson = false;
    const Spectrum s = solve(screened(0, 0.0), c);
    const auto weight = [C](double r) { return std::exp(-C / r) / (r * r); };
    const double quad = integrate([&](double r) { return r > 0 ? 4.0 * r * r * std::exp(-2.0 * r) * weight(r) : 0.0; },
                                  0.0, 60.0);
    CHECK(expectation(s.states[0].psi, s.grid, weight) == doctest::Approx(quad).epsilon(1e-5));
  }
}

TEST_CASE("expectation input checks") {
  const Grid g = make_grid(4.0, 3);
  CHECK_THROWS_AS(expectation(std::vector<double>{1.0, 1.0}, g, [](double) { return 1.0; }), DomainError);
  CHECK_THROWS_AS(expectation(std::vector<double>{1.0, 1.0, 1.0}, g, [](double) { return 1.0; }), DomainError);
  const double a = 1.0 / std::sqrt(3.0);
  CHECK_THROWS_AS(expectation(std::vector<double>{a, a, a}, g, [](double) { return std::nan(""); }), DomainError);
  CHECK(expectation(std::vector<double>{a, a, a}, g, [](double r) { return r; }) == doctest::Approx(2.0));
}

TEST_CASE("default step") {
  CHECK(default_delta_C(0.1) == 1e-4);
  CHECK(default_delta_C(50.0) == doctest::Approx(5e-3));
}

TEST_CASE("derivative signs") {
  for (double C : {0.1, 1.0, 20.0}) {
    const HftReport u = check_hft_unscaled(screened(0, C), 0, default_delta_C(C));
    const HftReport s = check_hft_scaled(screened(0, C), 0, default_delta_C(C));
    CHECK(u.expectation > 0.0);
    CHECK(u.finite_difference > 0.0);
    CHECK(s.expectation < 0.0);
    CHECK(s.finite_difference < 0.0);
    CHECK(u.grid_matched);
    CHECK(s.grid_matched);
  }
}

TEST_CASE("the two forms are consistent") {
  // d(C^2 E)/dC = 2 C E + C^2 dE/dC.
  for (double C : {0.3, 1.0, 4.0}) {
    const RadialProblem p = screened(0, C);
    const HftReport u = check_hft_unscaled(p, 0, default_delta_C(C));
    const HftReport s = check_hft_scaled(p, 0, default_delta_C(C));
    SolverConfig c;
    c.richardson = false;
    const double E = solve(p, c).states[0].E;
    CHECK(s.expectation == doctest::Approx(2.0 * C * E + C * C * u.expectation).epsilon(1e-5));
  }
}

TEST_CASE("residual shrinks quadratically with the step") {
  for (unsigned l : {0u, 1u}) {
    const RadialProblem p = screened(l, 0.1 + 0.4 * l);
    const HftReport a = check_hft_unscaled(p, 0, 1e-4);
    const HftReport b = check_hft_unscaled(p, 0, 5e-5);
    CHECK(a.rel_discrepancy < 1e-5);
    CHECK(a.rel_discrepancy / b.rel_discrepancy == doctest::Approx(4.0).epsilon(0.2));
  }
}

TEST_CASE("excited states and per-solve grids") {
  const HftReport u = check_hft_unscaled(screened(1, 0.5), 1, 1e-4);
  CHECK(u.state_index == 1);
  CHECK(u.rel_discrepancy < 1e-5);
  const HftReport loose = check_hft_unscaled(screened(0, 0.5), 0, 1e-4, {}, GridPolicy::PerSolve);
  CHECK(std::isfinite(loose.rel_discrepancy));
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(check_hft_unscaled(screened(0, 0.1), 0, 0.0), DomainError);
  CHECK_THROWS_AS(check_hft_unscaled(screened(0, 0.1), 0, 0.2), DomainError);
  CHECK_THROWS_AS(check_hft_scaled(screened(0, 0.1), 0, 0.1), DomainError);
  CHECK_THROWS_AS(check_hft_unscaled({0, 0.1, PotentialKind::truncated(1)}, 0, 1e-4), DomainError);
}

}
