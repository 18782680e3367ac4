#include "spectra/shooting.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spectra/errors.hpp"

namespace spectra {

namespace {

constexpr double kRescaleAbove = 1e150;
constexpr int kMaxBisectionSteps = 200;

// Near the origin u ~ r^s (1 + a1 r + a2 r^2) with U ~ s(s-1)/(2r^2) - Z/r.
struct OriginSeries {
  double s;
  double a1;
  double a2;
};

OriginSeries origin_series(const RadialProblem& problem, double E) {
  const double l = problem.l;
  double s = l + 1.0;
  double Z = 0.0;
  if (!problem.kind.is_truncated()) {
    // exp(-C/r)/r vanishes to all orders at r = 0 when C > 0.
    Z = problem.C == 0.0 ? 1.0 : 0.0;
  } else if (problem.kind.order() == 0) {
    Z = 1.0;
  } else if (problem.kind.order() == 1) {
    Z = 1.0;
    s = 0.5 + std::sqrt((l + 0.5) * (l + 0.5) + 2.0 * problem.C);
  } else {
    throw DomainError("shooting supports the screened potential and K = 0, 1 truncations, not " +
                      problem.kind.name());
  }
  const double a1 = -Z / s;
  const double a2 = (-2.0 * Z * a1 - 2.0 * E) / (4.0 * s + 2.0);
  return {s, a1, a2};
}

class NumerovSweep {
 public:
  NumerovSweep(const RadialProblem& problem, const Grid& grid, double E)
      : problem_(problem), h_(grid.h), last_(grid.n_points + 1), E_(E) {}

  std::size_t count() const {
    const std::size_t m = matching_index();

    // Outward from the origin, values scaled by h^-s.
    const OriginSeries series = origin_series(problem_, E_);
    const auto start = [&](double k) {
      const double r = k * h_;
      return std::pow(k, series.s) * (1.0 + series.a1 * r + series.a2 * r * r);
    };
    // An s-wave in the screened potential sees a smooth U with U(0) = 0, so the
    // recurrence can start from y_0 = 0 itself. Elsewhere the series seeds y_1, y_2.
    const bool from_origin = !problem_.kind.is_truncated() && problem_.C > 0.0 && problem_.l == 0;
    std::size_t first = from_origin ? 1 : 2;
    double prev = from_origin ? 0.0 : start(1.0);
    double cur = from_origin ? 1.0 : start(2.0);
    std::size_t nodes = sign_change(prev, cur);
    double w_prev = from_origin ? 1.0 : w(1);
    double w_cur = w(first);
    for (std::size_t i = first; i < m; ++i) {
      const double w_next = w(i + 1);
      const double next = ((12.0 - 10.0 * w_cur) * cur - w_prev * prev) / w_next;
      nodes += sign_change(cur, next);
      prev = cur;
      cur = next;
      w_prev = w_cur;
      w_cur = w_next;
      rescale(prev, cur);
    }
    const double out_ratio = prev / cur;  // y_{m-1} / y_m

    // Inward from the wall with the asymptotic exp(-kappa r) tail.
    const double kappa = E_ < 0.0 ? std::sqrt(-2.0 * E_) : 0.0;
    double after = 1.0;                     // y_{i+1}
    double here = std::exp(kappa * h_);     // y_i
    nodes += sign_change(after, here);
    double w_after = w(last_);
    double w_here = w(last_ - 1);
    for (std::size_t i = last_ - 1; i > m; --i) {
      const double w_next = w(i - 1);
      const double next = ((12.0 - 10.0 * w_here) * here - w_after * after) / w_next;
      nodes += sign_change(here, next);
      after = here;
      here = next;
      w_after = w_here;
      w_here = w_next;
      rescale(after, here);
    }
    const double in_ratio = after / here;  // y_{m+1} / y_m

    // Numerov-consistent jump in slope across r_m; positive once E passes the eigenvalue.
    const double jump = (w(m - 1) * out_ratio + w(m + 1) * in_ratio - (12.0 - 10.0 * w(m))) / h_;
    return nodes + (jump > 0.0 ? 1 : 0);
  }

 private:
  double f(std::size_t i) const { return 2.0 * (eval_effective(problem_, i * h_) - E_); }
  double w(std::size_t i) const { return 1.0 - h_ * h_ * f(i) / 12.0; }

  // Outermost node still inside the classically allowed region.
  std::size_t matching_index() const {
    std::size_t m = 0;
    for (std::size_t i = last_ - 1; i >= 1; --i) {
      if (eval_effective(problem_, i * h_) < E_) {
        m = i;
        break;
      }
    }
    if (m == 0) {
      double lowest = eval_effective(problem_, h_);
      m = 1;
      for (std::size_t i = 2; i < last_; ++i) {
        const double u = eval_effective(problem_, i * h_);
        if (u < lowest) {
          lowest = u;
          m = i;
        }
      }
    }
    return std::clamp<std::size_t>(m, 2, last_ - 2);
  }

  static std::size_t sign_change(double a, double b) { return (a < 0.0) != (b < 0.0) && a != 0.0 && b != 0.0; }

  static void rescale(double& a, double& b) {
    if (std::abs(b) > kRescaleAbove || std::abs(a) > kRescaleAbove) {
      a /= kRescaleAbove;
      b /= kRescaleAbove;
    }
  }

  const RadialProblem& problem_;
  double h_;
  std::size_t last_;  // index of the wall node
  double E_;
};

}  // namespace

std::size_t shooting_count(const RadialProblem& problem, const Grid& grid, double E) {
  validate(problem);
  if (grid.n_points < 4) throw ConfigurationError("shooting needs at least 4 interior nodes");
  return NumerovSweep(problem, grid, E).count();
}

double shoot_eigenvalue(const RadialProblem& problem, const Grid& grid, std::size_t nodes_target,
                        EnergyBracket bracket, double width) {
  if (!(bracket.lower < bracket.upper)) throw BracketError("bracket must satisfy lower < upper");
  const std::size_t at_lower = shooting_count(problem, grid, bracket.lower);
  const std::size_t at_upper = shooting_count(problem, grid, bracket.upper);
  if (at_lower != nodes_target || at_upper != nodes_target + 1)
    throw BracketError("bracket [" + std::to_string(bracket.lower) + ", " + std::to_string(bracket.upper) +
                       "] counts " + std::to_string(at_lower) + " and " + std::to_string(at_upper) +
                       " states below its ends; expected " + std::to_string(nodes_target) + " and " +
                       std::to_string(nodes_target + 1));
  double lo = bracket.lower;
  double hi = bracket.upper;
  for (int step = 0; step < kMaxBisectionSteps && hi - lo > width; ++step) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (shooting_count(problem, grid, mid) <= nodes_target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace spectra
