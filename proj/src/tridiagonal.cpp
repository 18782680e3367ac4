#include "spectra/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>
#include <string>

#include "spectra/errors.hpp"

namespace spectra::tridiag {

namespace {

constexpr int kMaxBisectionSteps = 400;
constexpr int kMaxReshifts = 5;
// Components below this fraction of the peak do not decide the sign.
constexpr double kSignificantFraction = 1e-8;

double pivot_floor(const SymmetricTridiagonal& t) {
  double emax = 1.0;
  for (double e : t.offdiag) emax = std::max(emax, e * e);
  return std::numeric_limits<double>::min() * emax;
}

// A NaN pivot leaves the count undefined.
constexpr std::size_t kNoCount = static_cast<std::size_t>(-1);

std::size_t sturm_count(const SymmetricTridiagonal& t, double x, double pivmin) {
  const std::size_t n = t.size();
  std::size_t count = 0;
  double q = t.diag[0] - x;
  for (std::size_t i = 0;; ++i) {
    if (std::isnan(q)) return kNoCount;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
    if (i + 1 == n) break;
    const double e = t.offdiag[i];
    q = (t.diag[i + 1] - x) - e * e / q;
  }
  return count;
}

void check_shape(const SymmetricTridiagonal& t) {
  if (t.diag.empty()) throw ConfigurationError("empty tridiagonal matrix");
  if (t.offdiag.size() + 1 != t.diag.size())
    throw ConfigurationError("offdiagonal must have size n-1");
}

void check_request(const SymmetricTridiagonal& t, std::size_t k, double tol) {
  check_shape(t);
  if (k < 1 || k > t.size())
    throw ConfigurationError("requested " + std::to_string(k) + " eigenvalues of a " +
                             std::to_string(t.size()) + "x" + std::to_string(t.size()) + " matrix");
  if (!(tol > 0.0)) throw ConfigurationError("eigenvalue tolerance must be positive");
}

}  // namespace

Interval gershgorin(const SymmetricTridiagonal& t) {
  check_shape(t);
  const std::size_t n = t.size();
  Interval box{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < n; ++i) {
    const double radius = (i > 0 ? std::abs(t.offdiag[i - 1]) : 0.0) + (i + 1 < n ? std::abs(t.offdiag[i]) : 0.0);
    box.lower = std::min(box.lower, t.diag[i] - radius);
    box.upper = std::max(box.upper, t.diag[i] + radius);
  }
  // Widen slightly so the extremes are strictly inside after rounding.
  const double pad = 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(box.lower), std::abs(box.upper)) +
                     std::numeric_limits<double>::min();
  return {box.lower - pad, box.upper + pad};
}

std::size_t sturm_count(const SymmetricTridiagonal& t, double x) {
  check_shape(t);
  const std::size_t count = sturm_count(t, x, pivot_floor(t));
  if (count == kNoCount) throw DomainError("Sturm count hit a NaN pivot");
  return count;
}

double bisect_eigenvalue(const SymmetricTridiagonal& t, std::size_t j, double tol, Interval start) {
  const double pivmin = pivot_floor(t);
  double lo = start.lower;
  double hi = start.upper;
  for (int step = 0; step < kMaxBisectionSteps; ++step) {
    if (hi - lo <= tol) return 0.5 * (lo + hi);
    const double mid = 0.5 * (lo + hi);
    // Adjacent doubles: the bracket cannot shrink any further.
    if (mid <= lo || mid >= hi) return mid;
    const std::size_t below = sturm_count(t, mid, pivmin);
    if (below == kNoCount) continue;
    if (below <= j) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw IterationLimitError("bisection for eigenvalue " + std::to_string(j) +
                            " did not converge (non-finite matrix entries?)");
}

std::vector<double> lowest_eigenvalues(const SymmetricTridiagonal& t, std::size_t k, double tol) {
  check_request(t, k, tol);
  const Interval box = gershgorin(t);
  std::vector<double> values(k);
  // Exceptions cannot cross the parallel region; remember the first one.
  std::exception_ptr failure;
  const auto count = static_cast<long>(k);
#pragma omp parallel for schedule(dynamic)
  for (long j = 0; j < count; ++j) {
    try {
      values[j] = bisect_eigenvalue(t, static_cast<std::size_t>(j), tol, box);
    } catch (...) {
#pragma omp critical(spectra_bisection_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return values;
}

std::vector<double> lowest_eigenvalues_serial(const SymmetricTridiagonal& t, std::size_t k, double tol) {
  check_request(t, k, tol);
  const Interval box = gershgorin(t);
  std::vector<double> values(k);
  for (std::size_t j = 0; j < k; ++j) values[j] = bisect_eigenvalue(t, j, tol, box);
  return values;
}

ShiftedLU::ShiftedLU(const SymmetricTridiagonal& t, double shift) {
  check_shape(t);
  const std::size_t n = t.size();
  diag_.resize(n);
  for (std::size_t i = 0; i < n; ++i) diag_[i] = t.diag[i] - shift;
  lower_ = t.offdiag;
  upper1_ = t.offdiag;
  upper2_.assign(n > 2 ? n - 2 : 0, 0.0);
  swapped_.assign(n > 1 ? n - 1 : 0, false);

  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double sub = lower_[i];
    if (std::abs(diag_[i]) >= std::abs(sub)) {
      if (diag_[i] == 0.0) {
        singular_ = true;
        lower_[i] = 0.0;
        continue;
      }
      const double factor = sub / diag_[i];
      lower_[i] = factor;
      diag_[i + 1] -= factor * upper1_[i];
    } else {
      // Swap rows i and i+1.
      const double factor = diag_[i] / sub;
      diag_[i] = sub;
      lower_[i] = factor;
      const double carried = upper1_[i];
      upper1_[i] = diag_[i + 1];
      diag_[i + 1] = carried - factor * diag_[i + 1];
      if (i + 2 < n) {
        upper2_[i] = upper1_[i + 1];
        upper1_[i + 1] = -factor * upper1_[i + 1];
      }
      swapped_[i] = true;
    }
  }
  if (diag_[n - 1] == 0.0) singular_ = true;
}

void ShiftedLU::solve(std::span<double> b) const {
  const std::size_t n = diag_.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!swapped_[i]) {
      b[i + 1] -= lower_[i] * b[i];
    } else {
      const double top = b[i];
      b[i] = b[i + 1];
      b[i + 1] = top - lower_[i] * b[i];
    }
  }
  b[n - 1] /= diag_[n - 1];
  if (n < 2) return;
  b[n - 2] = (b[n - 2] - upper1_[n - 2] * b[n - 1]) / diag_[n - 2];
  for (std::size_t i = n - 2; i-- > 0;)
    b[i] = (b[i] - upper1_[i] * b[i + 1] - upper2_[i] * b[i + 2]) / diag_[i];
}

std::vector<double> inverse_iteration(const SymmetricTridiagonal& t, double eigenvalue, double reshift,
                                      int iterations) {
  check_shape(t);
  const std::size_t n = t.size();
  double shift = eigenvalue;
  for (int attempt = 0; attempt <= kMaxReshifts; ++attempt, shift += reshift) {
    const ShiftedLU lu(t, shift);
    if (lu.singular()) continue;

    std::vector<double> x(n, 1.0);
    bool finite = true;
    for (int it = 0; it < iterations && finite; ++it) {
      lu.solve(x);
      const double norm = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
      finite = std::isfinite(norm) && norm > 0.0;
      if (finite)
        for (double& v : x) v /= norm;
    }
    if (!finite) continue;

    double peak = 0.0;
    for (double v : x) peak = std::max(peak, std::abs(v));
    const auto first = std::find_if(x.begin(), x.end(),
                                    [&](double v) { return std::abs(v) > kSignificantFraction * peak; });
    if (first != x.end() && *first < 0.0)
      for (double& v : x) v = -v;
    return x;
  }
  throw SingularSolveError("inverse iteration stayed singular after re-shifting");
}

}  // namespace spectra::tridiag
