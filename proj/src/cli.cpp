#include "spectra/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include "spectra/analytic.hpp"
#include "spectra/errors.hpp"
#include "spectra/format.hpp"
#include "spectra/hft.hpp"
#include "spectra/reference_tables.hpp"
#include "spectra/solver.hpp"
#include "spectra/sweep.hpp"

namespace spectra::cli {

namespace {

constexpr double kAsymptoteTolerance = 0.01;
constexpr double kHftAssertTolerance = 1e-4;

struct SolverFlags {
  std::size_t n_points = 16000;
  bool no_richardson = false;
  double scaled_threshold = 10.0;

  SolverConfig config(std::size_t k_states) const {
    SolverConfig c;
    c.k_states = k_states;
    c.n_points = n_points;
    c.richardson = !no_richardson;
    c.scaled_threshold = scaled_threshold;
    return c;
  }
};

struct OutputFlags {
  std::string out_path;
  int precision = 12;
};

void add_solver_flags(CLI::App* cmd, SolverFlags& flags) {
  cmd->add_option("--n-points", flags.n_points, "Interior grid points")
      ->check(CLI::Range(std::size_t{16}, std::size_t{50'000'000}));
  cmd->add_flag("--no-richardson", flags.no_richardson, "Skip the half-spacing solve and extrapolation");
  cmd->add_option("--scaled-threshold", flags.scaled_threshold, "Solve in rho = r/C once C reaches this value")
      ->check(CLI::NonNegativeNumber);
}

void add_output_flags(CLI::App* cmd, OutputFlags& flags) {
  cmd->add_option("--out", flags.out_path, "Write CSV here instead of stdout");
  cmd->add_option("--precision", flags.precision, "Significant digits in CSV numbers")->check(CLI::Range(3, 17));
}

std::string optional_number(const std::optional<double>& v, int precision) {
  return v ? format_number(*v, precision) : std::string{};
}

int cmd_spectrum(unsigned l, double C, std::size_t states, const SolverFlags& solver, const OutputFlags& output,
                 std::ostream& csv) {
  const Spectrum spectrum = solve({l, C, PotentialKind::screened_coulomb()}, solver.config(states));
  CsvWriter writer(csv);
  writer.row({"index", "E", "nodes", "converged", "richardson_estimate"});
  for (std::size_t i = 0; i < spectrum.states.size(); ++i) {
    const BoundState& s = spectrum.states[i];
    writer.row({std::to_string(i), format_number(s.E, output.precision), std::to_string(s.nodes),
                s.converged ? "true" : "false", optional_number(s.richardson_estimate, output.precision)});
  }
  return kOk;
}

int cmd_table1(bool check, const OutputFlags& output, std::ostream& csv, std::ostream& err) {
  CsvWriter writer(csv);
  writer.row({"nu", "l", "n", "E_rounded", "E"});
  int mismatches = 0;
  for (const auto& entry : reference::k1_table()) {
    const unsigned n = principal_from_nodes(entry.nu, entry.l);
    const double E = k1_energy(n, entry.l, reference::kK1TableC).value;
    const int digits = count_significant_digits(entry.printed);
    writer.row({std::to_string(entry.nu), std::to_string(entry.l), std::to_string(n), format_significant(E, digits),
                format_number(E, output.precision)});
    if (check && round_significant(E, digits) != parse_printed(entry.printed)) {
      ++mismatches;
      err << "table1 mismatch at nu=" << entry.nu << " l=" << entry.l << ": computed "
          << format_significant(E, digits) << " (" << format_number(E, 10) << "), published " << entry.printed
          << '\n';
    }
  }
  if (check) err << "table1 check: " << (40 - mismatches) << "/40 entries match\n";
  return mismatches == 0 ? kOk : kCheckFailed;
}

int cmd_table2(bool check, const OutputFlags& output, std::ostream& csv, std::ostream& err) {
  CsvWriter writer(csv);
  writer.row({"C", "nu", "n", "E_rounded", "E"});
  int mismatches = 0;
  const auto table = reference::harmonic_table();
  for (const auto& entry : table) {
    const ApproxEigenvalue E = harmonic_energy(entry.nu, entry.C);
    const int digits = count_significant_digits(entry.printed);
    writer.row({format_number(entry.C, output.precision), std::to_string(entry.nu), std::to_string(E.n),
                format_mantissa_exponent(E.value, digits), format_number(E.value, output.precision)});
    if (check && round_significant(E.value, digits) != parse_printed(entry.printed)) {
      ++mismatches;
      err << "table2 mismatch at C=" << format_number(entry.C, 6) << " nu=" << entry.nu << ": computed "
          << format_mantissa_exponent(E.value, digits) << ", published " << entry.printed << '\n';
    }
  }
  if (check)
    err << "table2 check: " << (table.size() - mismatches) << "/" << table.size() << " entries match\n";
  return mismatches == 0 ? kOk : kCheckFailed;
}

void write_sweep(const std::vector<SweepRecord>& rows, int precision, std::ostream& csv) {
  CsvWriter writer(csv);
  writer.row({"C", "n", "l", "E_numeric", "E_k1", "E_harmonic", "c2e", "ce", "dEdC_expect", "converged"});
  for (const SweepRecord& r : rows) {
    writer.row({format_number(r.C, precision), std::to_string(r.n), std::to_string(r.l),
                format_number(r.E_numeric, precision), format_number(r.E_k1, precision),
                optional_number(r.E_harmonic, precision), format_number(r.c2e, precision),
                format_number(r.ce, precision), optional_number(r.dEdC_expect, precision),
                r.converged ? "true" : "false"});
  }
}

int monotone_verdict(const std::vector<SweepRecord>& rows, std::ostream& err) {
  const MonotonicityReport report = check_monotone(rows);
  if (report.ok()) return kOk;
  err << "monotonicity violated: " << report.energy_violations << " E(C) and " << report.c2e_violations
      << " C^2 E(C) violations\n";
  return kCheckFailed;
}

int cmd_sweep(unsigned l, unsigned n, const std::vector<double>& Cs, bool assert_monotone, const SolverFlags& solver,
              const OutputFlags& output, std::ostream& csv, std::ostream& err) {
  const auto rows = run_sweep(l, n, Cs, solver.config(1));
  write_sweep(rows, output.precision, csv);
  return assert_monotone ? monotone_verdict(rows, err) : kOk;
}

int cmd_asymptote(const std::vector<double>& Cs, bool assert_limit, bool assert_monotone, const SolverFlags& solver,
                  const OutputFlags& output, std::ostream& csv, std::ostream& err) {
  const auto rows = run_sweep(0, 1, Cs, solver.config(1));
  write_sweep(rows, output.precision, csv);
  int code = assert_monotone ? monotone_verdict(rows, err) : kOk;
  if (assert_limit && !rows.empty()) {
    const double limit = -1.0 / std::numbers::e;
    const double rel = std::abs(rows.back().ce - limit) / std::abs(limit);
    if (!(rel < kAsymptoteTolerance)) {
      err << "C*E = " << format_number(rows.back().ce, 8) << " at C = " << format_number(rows.back().C, 8)
          << " is " << format_number(rel, 4) << " away from -1/e (relative)\n";
      code = kCheckFailed;
    }
  }
  return code;
}

int cmd_hft_check(unsigned l, std::size_t state, double C, std::optional<double> delta_C, bool assert_ok,
                  const SolverFlags& solver, const OutputFlags& output, std::ostream& csv, std::ostream& err) {
  const RadialProblem problem{l, C, PotentialKind::screened_coulomb()};
  const double dC = delta_C.value_or(default_delta_C(C));
  const SolverConfig config = solver.config(state + 1);
  std::vector<HftReport> reports;
  reports.push_back(check_hft_unscaled(problem, state, dC, config));
  reports.push_back(check_hft_scaled(problem, state, dC, config));

  CsvWriter writer(csv);
  writer.row({"form", "l", "state", "C", "delta_C", "expectation", "finite_difference", "rel_discrepancy",
              "grid_matched"});
  int code = kOk;
  for (const HftReport& r : reports) {
    writer.row({std::string(form_name(r.form)), std::to_string(r.l), std::to_string(r.state_index),
                format_number(r.C, output.precision), format_number(r.delta_C, output.precision),
                format_number(r.expectation, output.precision), format_number(r.finite_difference, output.precision),
                format_number(r.rel_discrepancy, output.precision), r.grid_matched ? "true" : "false"});
    for (const auto& w : r.warnings) err << "warning: " << w << '\n';
    if (assert_ok && !(r.rel_discrepancy < kHftAssertTolerance)) {
      err << form_name(r.form) << " Hellmann-Feynman discrepancy " << format_number(r.rel_discrepancy, 4)
          << " exceeds " << kHftAssertTolerance << '\n';
      code = kHftAssertFailed;
    }
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bound-state spectra of the screened Coulomb potential -exp(-C/r)/r"};
  app.require_subcommand(1);

  unsigned l = 0;
  double C = 0.0;
  std::size_t states = 1;
  unsigned n = 1;
  std::size_t state = 0;
  double delta_C = 0.0;
  std::vector<double> C_list;
  bool check = false;
  bool assert_flag = false;
  bool assert_monotone = false;
  SolverFlags solver;
  OutputFlags output;

  auto* spectrum = app.add_subcommand("spectrum", "Lowest bound states for one (l, C)");
  spectrum->add_option("--l", l, "Angular momentum");
  spectrum->add_option("--C", C, "Screening parameter")->check(CLI::NonNegativeNumber);
  spectrum->add_option("--states", states, "Number of lowest states")->check(CLI::PositiveNumber);
  add_solver_flags(spectrum, solver);
  add_output_flags(spectrum, output);

  auto* table1 = app.add_subcommand("table1", "K=1 closed form at C = 0.1, nu = 0..9, l = 0..3");
  table1->add_flag("--check", check, "Compare with the published values");
  add_output_flags(table1, output);

  auto* table2 = app.add_subcommand("table2", "Harmonic asymptote for C = 1e2..1e5, nu = 0..2");
  table2->add_flag("--check", check, "Compare with the published values");
  add_output_flags(table2, output);

  auto* sweep = app.add_subcommand("sweep", "One state across a list of C values");
  sweep->add_option("--l", l, "Angular momentum");
  CLI::Option* n_opt = sweep->add_option("--n", n, "Principal quantum number (default l + 1)");
  sweep->add_option("--C-list", C_list, "Comma-separated C values")
      ->delimiter(',')
      ->required()
      ->check(CLI::NonNegativeNumber);
  sweep->add_flag("--assert-monotone", assert_monotone, "Fail unless E rises and C^2 E falls along C");
  add_solver_flags(sweep, solver);
  add_output_flags(sweep, output);

  auto* asymptote = app.add_subcommand("asymptote", "Ground-state C*E approach to -1/e at large C");
  asymptote->add_option("--C-list", C_list, "Comma-separated C values (default 1e2,1e3,1e4,1e5)")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  asymptote->add_flag("--assert", assert_flag, "Fail unless C*E at the largest C is within 1% of -1/e");
  asymptote->add_flag("--assert-monotone", assert_monotone, "Fail unless E rises and C^2 E falls along C");
  add_solver_flags(asymptote, solver);
  add_output_flags(asymptote, output);

  auto* hft = app.add_subcommand("hft-check", "Hellmann-Feynman check of dE/dC and d(C^2 E)/dC");
  hft->add_option("--l", l, "Angular momentum");
  hft->add_option("--state", state, "State index (radial nodes)");
  hft->add_option("--C", C, "Screening parameter")->required()->check(CLI::PositiveNumber);
  CLI::Option* delta_opt =
      hft->add_option("--delta-C", delta_C, "Central-difference step (default 1e-4 max(1, C))")
          ->check(CLI::PositiveNumber);
  hft->add_flag("--assert", assert_flag, "Fail unless both discrepancies are below 1e-4");
  add_solver_flags(hft, solver);
  add_output_flags(hft, output);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadFlags;
  }

  std::ostringstream csv;
  int code = kOk;
  try {
    if (spectrum->parsed()) {
      code = cmd_spectrum(l, C, states, solver, output, csv);
    } else if (table1->parsed()) {
      code = cmd_table1(check, output, csv, err);
    } else if (table2->parsed()) {
      code = cmd_table2(check, output, csv, err);
    } else if (sweep->parsed()) {
      if (n_opt->count() == 0) n = l + 1;
      if (n <= l) {
        err << "error: --n must exceed --l\n";
        return kBadFlags;
      }
      code = cmd_sweep(l, n, C_list, assert_monotone, solver, output, csv, err);
    } else if (asymptote->parsed()) {
      if (C_list.empty()) C_list = {1e2, 1e3, 1e4, 1e5};
      code = cmd_asymptote(C_list, assert_flag, assert_monotone, solver, output, csv, err);
    } else if (hft->parsed()) {
      const std::optional<double> dC = delta_opt->count() ? std::optional<double>(delta_C) : std::nullopt;
      code = cmd_hft_check(l, state, C, dC, assert_flag, solver, output, csv, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kSolverError;
  }

  if (output.out_path.empty()) {
    out << csv.str();
  } else {
    std::ofstream file(output.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << output.out_path << " for writing\n";
      return kBadFlags;
    }
    file << csv.str();
  }
  return code;
}

}  // namespace spectra::cli
