#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace spectra::tridiag {

/// Symmetric tridiagonal matrix: diag has n entries, offdiag n-1.
struct SymmetricTridiagonal {
  std::vector<double> diag;
  std::vector<double> offdiag;

  std::size_t size() const { return diag.size(); }
};

struct Interval {
  double lower;
  double upper;
};

Interval gershgorin(const SymmetricTridiagonal& t);

/// Number of eigenvalues strictly below x (sign count of the LDL^T pivots of T - x).
std::size_t sturm_count(const SymmetricTridiagonal& t, double x);

/// The j-th smallest eigenvalue (0-based) by Sturm bisection to bracket width <= tol.
double bisect_eigenvalue(const SymmetricTridiagonal& t, std::size_t j, double tol, Interval start);

/// k smallest eigenvalues, one bisection per eigenvalue spread over OpenMP threads.
/// Each bisection is independent, so the result is bitwise identical to the serial path.
std::vector<double> lowest_eigenvalues(const SymmetricTridiagonal& t, std::size_t k, double tol);

/// Single-threaded reference for lowest_eigenvalues.
std::vector<double> lowest_eigenvalues_serial(const SymmetricTridiagonal& t, std::size_t k, double tol);

/// LU factorization of T - shift*I with partial pivoting.
class ShiftedLU {
 public:
  ShiftedLU(const SymmetricTridiagonal& t, double shift);

  bool singular() const { return singular_; }
  /// Overwrites rhs with (T - shift)^{-1} rhs.
  void solve(std::span<double> rhs) const;

 private:
  std::vector<double> lower_;   // multipliers
  std::vector<double> diag_;    // U diagonal
  std::vector<double> upper1_;  // U first superdiagonal
  std::vector<double> upper2_;  // U second superdiagonal (fill-in from pivoting)
  std::vector<bool> swapped_;
  bool singular_ = false;
};

/// Unit-norm eigenvector for an eigenvalue estimate by inverse iteration from the
/// all-ones seed. Sign is fixed so the first significant component is positive.
/// On an exactly singular shift the shift is moved by `reshift` (up to 5 times).
std::vector<double> inverse_iteration(const SymmetricTridiagonal& t, double eigenvalue, double reshift,
                                      int iterations = 3);

}  // namespace spectra::tridiag
