#include "burgers/tridiagonal.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "burgers/errors.hpp"

namespace burgers {

double Tridiagonal::at(std::size_t i, std::size_t j) const {
  if (i == j) return diag[i];
  if (j + 1 == i) return lower[i];
  if (i + 1 == j) return upper[i];
  return 0.0;
}

std::vector<double> Tridiagonal::apply(std::span<const double> x) const {
  const std::size_t n = size();
  if (x.size() != n) throw std::invalid_argument("Tridiagonal::apply: length mismatch");
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = diag[i] * x[i];
    if (i > 0) s += lower[i] * x[i - 1];
    if (i + 1 < n) s += upper[i] * x[i + 1];
    y[i] = s;
  }
  return y;
}

void thomas_solve(const Tridiagonal& A, std::span<const double> rhs, std::span<double> x) {
  const std::size_t n = A.size();
  if (rhs.size() != n || x.size() != n)
    throw std::invalid_argument("thomas_solve: length mismatch");
  if (n == 0) return;

  // Forward sweep stores the modified super-diagonal in a scratch vector and
  // the modified right-hand side in x.
  std::vector<double> c(n);
  double pivot = A.diag[0];
  if (!(std::abs(pivot) >= kZeroPivot))
    throw SingularTridiagonal("zero pivot at row 0", -1);
  c[0] = A.upper[0] / pivot;
  x[0] = rhs[0] / pivot;
  for (std::size_t i = 1; i < n; ++i) {
    pivot = A.diag[i] - A.lower[i] * c[i - 1];
    if (!(std::abs(pivot) >= kZeroPivot))
      throw SingularTridiagonal("zero pivot at row " + std::to_string(i), -1);
    c[i] = (i + 1 < n) ? A.upper[i] / pivot : 0.0;
    x[i] = (rhs[i] - A.lower[i] * x[i - 1]) / pivot;
  }
  for (std::size_t i = n - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
}

std::vector<double> thomas_solve(const Tridiagonal& A, std::span<const double> rhs) {
  std::vector<double> x(A.size());
  thomas_solve(A, rhs, x);
  return x;
}

}  // namespace burgers
