// Acceptance gate: one PASS/FAIL line per criterion. Usage: spectra_acceptance [criterion]
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dense_oracle.hpp"
#include "shooting_bracket.hpp"
#include "spectra/analytic.hpp"
#include "spectra/cli.hpp"
#include "spectra/format.hpp"
#include "spectra/hft.hpp"
#include "spectra/reference_tables.hpp"
#include "spectra/solver.hpp"
#include "spectra/sweep.hpp"
#include "spectra/tridiagonal.hpp"

using namespace spectra;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double time_limit_s;  // 0 means no runtime bound
  std::function<Outcome()> run;
};

RadialProblem screened(unsigned l, double C) { return {l, C, PotentialKind::screened_coulomb()}; }

std::string num(double v) { return format_number(v, 4); }

Outcome cli_check(const char* table) {
  std::ostringstream out, err;
  const int code = cli::run({"spectra", table, "--check"}, out, err);
  std::string summary = err.str();
  while (!summary.empty() && summary.back() == '\n') summary.pop_back();
  const auto last = summary.rfind('\n');
  if (last != std::string::npos) summary = summary.substr(0, last) + "; " + summary.substr(last + 1);
  return {code == 0, summary.empty() ? "exit " + std::to_string(code) : summary};
}

Outcome hydrogen_limit() {
  constexpr double tol = 1e-6;
  double worst = 0.0;
  for (unsigned l = 0; l <= 2; ++l) {
    SolverConfig c;
    c.n_points = 16000;
    c.richardson = true;
    c.k_states = 3 - l;
    const Spectrum s = solve(screened(l, 0.0), c);
    if (s.states.size() != c.k_states) return {false, "missing states at l=" + std::to_string(l)};
    for (std::size_t i = 0; i < s.states.size(); ++i)
      worst = std::max(worst, std::abs(s.states[i].best_energy() - coulomb_energy(l + 1 + i)));
  }
  return {worst <= tol, "max |E - E_n| = " + num(worst) + " (tol " + num(tol) + ")"};
}

Outcome oracle_equivalence() {
  constexpr double tol = 1e-6;
  double worst = 0.0;
  std::string where;
  for (unsigned l : {0u, 1u, 7u}) {
    for (double C : {0.01, 0.1, 1.0}) {
      const RadialProblem p = screened(l, C);
      const Spectrum s = solve(p);
      const double diff = std::abs(s.states.at(0).best_energy() - oracle::shoot_ground_state(p, s.grid));
      if (diff >= worst) {
        worst = diff;
        where = "l=" + std::to_string(l) + " C=" + num(C);
      }
    }
  }
  return {worst <= tol, "max |E_matrix - E_shoot| = " + num(worst) + " at " + where + " (tol " + num(tol) + ")"};
}

Outcome hft_structure() {
  constexpr double rel_tol = 1e-5;
  constexpr double ratio_target = 4.0, ratio_slack = 0.2;
  bool pass = true;
  std::string detail;
  for (const auto& [l, C] : {std::pair{0u, 0.1}, std::pair{1u, 0.5}}) {
    for (HftForm form : {HftForm::Unscaled, HftForm::Scaled}) {
      const auto check = form == HftForm::Unscaled ? check_hft_unscaled : check_hft_scaled;
      const HftReport a = check(screened(l, C), 0, 1e-4, {}, GridPolicy::Shared);
      const HftReport b = check(screened(l, C), 0, 5e-5, {}, GridPolicy::Shared);
      const double ratio = a.rel_discrepancy / b.rel_discrepancy;
      const bool ok = a.rel_discrepancy < rel_tol && std::abs(ratio - ratio_target) <= ratio_slack * ratio_target;
      pass = pass && ok;
      detail += std::string(detail.empty() ? "" : "; ") + std::string(form_name(form)) + " l=" + std::to_string(l) +
                " C=" + num(C) + " rel=" + num(a.rel_discrepancy) + " ratio=" + num(ratio);
    }
  }
  return {pass, detail};
}

Outcome monotonicity() {
  std::vector<double> small;
  for (int i = 0; i <= 10; ++i) small.push_back(0.02 * i);
  const std::vector<double> wide{0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0};
  const auto a = run_sweep(0, 1, small, {});
  const auto b = run_sweep(0, 1, wide, {});
  const std::size_t e_viol = check_monotone(a).energy_violations;
  const std::size_t c_viol = check_monotone(b).c2e_violations;

  // C^2 E -> 0: compare |C^2 E(0.01)| with the magnitude scale of C^2 E at C = 1,
  // taken as max(1, |C^2 E(1)|) in Hartree.
  const auto ends = run_sweep(0, 1, std::vector<double>{0.01, 1.0}, {});
  const double small_c2e = std::abs(ends[0].c2e);
  const double scale = std::max(1.0, std::abs(ends[1].c2e));
  const bool trend = small_c2e < 1e-4 * scale;
  return {e_viol == 0 && c_viol == 0 && trend,
          "E(C) violations " + std::to_string(e_viol) + ", C^2E(C) violations " + std::to_string(c_viol) +
              ", |C^2E(0.01)| = " + num(small_c2e) + " vs 1e-4 * " + num(scale) + " (|C^2E(1)| = " +
              num(std::abs(ends[1].c2e)) + ")"};
}

Outcome asymptote() {
  const double C = 1e4;
  const Spectrum s = solve(screened(0, C));
  if (!s.scaled) return {false, "solve at C = 1e4 did not use scaled coordinates"};
  const double E = s.states.at(0).best_energy();
  const double limit = -1.0 / std::numbers::e;
  const double rel_limit = std::abs(C * E - limit) / std::abs(limit);
  const double table = parse_printed("-3.6485(-5)");
  const double rel_table = std::abs(E - table) / std::abs(table);
  return {rel_limit < 0.01 && rel_table < 0.005,
          "C*E = " + format_number(C * E, 8) + ", off -1/e by " + num(100 * rel_limit) + "% (tol 1%), off " +
              "harmonic value by " + num(100 * rel_table) + "% (tol 0.5%)"};
}

Outcome persistence() {
  std::vector<std::pair<unsigned, double>> cases;
  for (double C : {1e-2, 1e-1, 1.0, 10.0, 1e2, 1e3, 1e4}) cases.emplace_back(0u, C);
  cases.emplace_back(7u, 0.1);
  std::size_t bound = 0;
  double highest = -1.0;
  for (const auto& [l, C] : cases) {
    const Spectrum s = solve(screened(l, C));
    if (!s.states.empty() && s.states[0].best_energy() < 0.0) ++bound;
    if (!s.states.empty()) highest = std::max(highest, s.states[0].best_energy());
  }
  return {bound == cases.size(),
          std::to_string(bound) + "/" + std::to_string(cases.size()) + " ground states bound, highest E = " +
              num(highest)};
}

Outcome tridiagonal_oracle() {
  constexpr double tol = 1e-10;
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<std::size_t> size(1, 64);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    tridiag::SymmetricTridiagonal t;
    const std::size_t n = size(rng);
    for (std::size_t i = 0; i < n; ++i) t.diag.push_back(entry(rng));
    for (std::size_t i = 0; i + 1 < n; ++i) t.offdiag.push_back(entry(rng));
    const auto expected = oracle::jacobi_eigenvalues(t);
    const auto got = tridiag::lowest_eigenvalues(t, n, 1e-13);
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(got[i] - expected[i]));
  }
  return {worst <= tol, "100 matrices, max |lambda - lambda_dense| = " + num(worst) + " (tol " + num(tol) + ")"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "K=1 table at C=0.1", 1.0, [] { return cli_check("table1"); }},
      {2, "harmonic table", 1.0, [] { return cli_check("table2"); }},
      {3, "hydrogen limit", 60.0, hydrogen_limit},
      {4, "matrix vs shooting", 120.0, oracle_equivalence},
      {5, "Hellmann-Feynman structure", 0.0, hft_structure},
      {6, "monotonicity sweeps", 0.0, monotonicity},
      {7, "large-C asymptote", 30.0, asymptote},
      {8, "bound-state persistence", 0.0, persistence},
      {9, "tridiagonal eigen-oracle", 10.0, tridiagonal_oracle},
  };

  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > static_cast<int>(criteria.size())) {
      std::cerr << "usage: " << argv[0] << " [1-" << criteria.size() << "]\n";
      return 2;
    }
  }

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (only && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string timing = format_number(seconds, 3) + " s";
    if (c.time_limit_s > 0.0) {
      timing += " (limit " + format_number(c.time_limit_s, 3) + " s)";
      if (seconds >= c.time_limit_s) outcome.pass = false;
    }
    if (!outcome.pass) ++failures;
    std::cout << "criterion " << c.id << " [" << c.title << "]: " << (outcome.pass ? "PASS" : "FAIL") << ": "
              << outcome.detail << ", " << timing << '\n';
  }
  return failures == 0 ? 0 : 1;
}
