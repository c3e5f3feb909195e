#pragma once

#include <span>
#include <vector>

namespace burgers {

/// Square tridiagonal matrix stored by diagonals. lower[0] and
/// upper[n-1] are unused and kept at zero.
struct Tridiagonal {
  std::vector<double> lower;
  std::vector<double> diag;
  std::vector<double> upper;

  explicit Tridiagonal(std::size_t n = 0) : lower(n, 0.0), diag(n, 0.0), upper(n, 0.0) {}

  std::size_t size() const noexcept { return diag.size(); }

  /// Dense-style accessor; zero outside the band.
  double at(std::size_t i, std::size_t j) const;

  std::vector<double> apply(std::span<const double> x) const;
};

inline constexpr double kZeroPivot = 1e-300;

/// Thomas algorithm, no pivoting. Throws SingularTridiagonal when a pivot
/// falls below kZeroPivot in magnitude.
void thomas_solve(const Tridiagonal& A, std::span<const double> rhs, std::span<double> x);

std::vector<double> thomas_solve(const Tridiagonal& A, std::span<const double> rhs);

}  // namespace burgers
