#include "burgers/kernels.hpp"

#include <stdexcept>
#include <string>

#include "burgers/operators.hpp"

namespace burgers {

double BoundaryLaw::left(double z, const ModelParams& p) const {
  switch (kind) {
    case Kind::feedback: return ops::g0_eval(z, p);
    case Kind::uncontrolled: return 0.0;
    case Kind::prescribed: return flux0;
  }
  return 0.0;
}

double BoundaryLaw::right(double z, const ModelParams& p) const {
  switch (kind) {
    case Kind::feedback: return ops::gN_eval(z, p);
    case Kind::uncontrolled: return 0.0;
    case Kind::prescribed: return flux1;
  }
  return 0.0;
}

double BoundaryLaw::left_slope(double z, const ModelParams& p) const {
  return kind == Kind::feedback ? ops::g0_slope(z, p) : 0.0;
}

double BoundaryLaw::right_slope(double z, const ModelParams& p) const {
  return kind == Kind::feedback ? ops::gN_slope(z, p) : 0.0;
}

namespace kernels {
namespace {

// Row i of the spatial operator given the stencil values around it.
// zl/zr are ignored at the left/right end respectively.
inline double spatial_row(int i, int N, double zl, double z, double zr, const SchemeContext& c) {
  const double h = c.h;
  const ModelParams& p = c.params;
  if (i == 0) {
    const double d = (zr - z) / h;
    return -(2.0 * p.nu / (h * h)) * (zr - z - h * c.boundary.left(z, p)) + p.wd * d +
           (2.0 * z + zr) * d / 3.0;
  }
  if (i == N) {
    const double d = (z - zl) / h;
    return -(2.0 * p.nu / (h * h)) * (zl - z + h * c.boundary.right(z, p)) + p.wd * d +
           (2.0 * z + zl) * d / 3.0;
  }
  const double dc = (zr - zl) / (2.0 * h);
  return -p.nu * (zr - 2.0 * z + zl) / (h * h) + p.wd * dc + (zl + z + zr) * dc / 3.0;
}

// ∂S_i/∂Z_{i-1}, ∂S_i/∂Z_i, ∂S_i/∂Z_{i+1}.
struct RowSlopes {
  double lower = 0.0;
  double diag = 0.0;
  double upper = 0.0;
};

inline RowSlopes spatial_row_slopes(int i, int N, double zl, double z, double zr,
                                    const SchemeContext& c) {
  const double h = c.h;
  const ModelParams& p = c.params;
  const double a = 2.0 * p.nu / (h * h);
  RowSlopes s;
  if (i == 0) {
    const double d = (zr - z) / h;
    s.diag = -a * (-1.0 - h * c.boundary.left_slope(z, p)) - p.wd / h +
             (2.0 * d - (2.0 * z + zr) / h) / 3.0;
    s.upper = -a + p.wd / h + (d + (2.0 * z + zr) / h) / 3.0;
    return s;
  }
  if (i == N) {
    const double d = (z - zl) / h;
    s.diag = -a * (-1.0 + h * c.boundary.right_slope(z, p)) + p.wd / h +
             (2.0 * d + (2.0 * z + zl) / h) / 3.0;
    s.lower = -a - p.wd / h + (d - (2.0 * z + zl) / h) / 3.0;
    return s;
  }
  const double dc = (zr - zl) / (2.0 * h);
  const double sum = zl + z + zr;
  s.lower = -p.nu / (h * h) - p.wd / (2.0 * h) + (dc - sum / (2.0 * h)) / 3.0;
  s.diag = 2.0 * p.nu / (h * h) + dc / 3.0;
  s.upper = -p.nu / (h * h) + p.wd / (2.0 * h) + (dc + sum / (2.0 * h)) / 3.0;
  return s;
}

void check_lengths(std::size_t a, std::size_t b, const char* op) {
  if (a != b) throw std::invalid_argument(std::string(op) + ": length mismatch");
  if (a < 2) throw std::invalid_argument(std::string(op) + ": need at least two nodes");
}

// Z_j = θ Wnext_j + (1-θ) Wn_j, evaluated on demand.
struct Blend {
  std::span<const double> next, prev;
  double theta;
  double operator()(int j) const { return theta * next[j] + (1.0 - theta) * prev[j]; }
};

inline double residual_row(int i, int N, const Blend& Z, const SchemeContext& c) {
  const double zl = i > 0 ? Z(i - 1) : 0.0;
  const double zr = i < N ? Z(i + 1) : 0.0;
  return (Z.next[i] - Z.prev[i]) / c.k + spatial_row(i, N, zl, Z(i), zr, c);
}

inline void jacobian_row(int i, int N, const Blend& Z, const SchemeContext& c, Tridiagonal& J) {
  const double zl = i > 0 ? Z(i - 1) : 0.0;
  const double zr = i < N ? Z(i + 1) : 0.0;
  const RowSlopes s = spatial_row_slopes(i, N, zl, Z(i), zr, c);
  const double th = c.params.theta;
  J.lower[i] = th * s.lower;
  J.diag[i] = 1.0 / c.k + th * s.diag;
  J.upper[i] = th * s.upper;
}

void resize(Tridiagonal& J, std::size_t n) {
  if (J.size() != n) J = Tridiagonal(n);
}

}  // namespace

void spatial_operator_serial(std::span<const double> Z, const SchemeContext& ctx,
                             std::span<double> out) {
  check_lengths(Z.size(), out.size(), "spatial_operator");
  const int N = static_cast<int>(Z.size()) - 1;
  for (int i = 0; i <= N; ++i) {
    const double zl = i > 0 ? Z[i - 1] : 0.0;
    const double zr = i < N ? Z[i + 1] : 0.0;
    out[i] = spatial_row(i, N, zl, Z[i], zr, ctx);
  }
}

void spatial_operator_parallel(std::span<const double> Z, const SchemeContext& ctx,
                               std::span<double> out) {
  check_lengths(Z.size(), out.size(), "spatial_operator");
  const int N = static_cast<int>(Z.size()) - 1;
#pragma omp parallel for schedule(static) if (N + 1 >= kParallelMinRows)
  for (int i = 0; i <= N; ++i) {
    const double zl = i > 0 ? Z[i - 1] : 0.0;
    const double zr = i < N ? Z[i + 1] : 0.0;
    out[i] = spatial_row(i, N, zl, Z[i], zr, ctx);
  }
}

void residual_serial(std::span<const double> Wnext, std::span<const double> Wn,
                     const SchemeContext& ctx, std::span<double> out) {
  check_lengths(Wnext.size(), Wn.size(), "residual");
  check_lengths(Wnext.size(), out.size(), "residual");
  const int N = static_cast<int>(Wn.size()) - 1;
  const Blend Z{Wnext, Wn, ctx.params.theta};
  for (int i = 0; i <= N; ++i) out[i] = residual_row(i, N, Z, ctx);
}

void residual_parallel(std::span<const double> Wnext, std::span<const double> Wn,
                       const SchemeContext& ctx, std::span<double> out) {
  check_lengths(Wnext.size(), Wn.size(), "residual");
  check_lengths(Wnext.size(), out.size(), "residual");
  const int N = static_cast<int>(Wn.size()) - 1;
  const Blend Z{Wnext, Wn, ctx.params.theta};
#pragma omp parallel for schedule(static) if (N + 1 >= kParallelMinRows)
  for (int i = 0; i <= N; ++i) out[i] = residual_row(i, N, Z, ctx);
}

void jacobian_serial(std::span<const double> Wnext, std::span<const double> Wn,
                     const SchemeContext& ctx, Tridiagonal& J) {
  check_lengths(Wnext.size(), Wn.size(), "jacobian");
  resize(J, Wn.size());
  const int N = static_cast<int>(Wn.size()) - 1;
  const Blend Z{Wnext, Wn, ctx.params.theta};
  for (int i = 0; i <= N; ++i) jacobian_row(i, N, Z, ctx, J);
}

void jacobian_parallel(std::span<const double> Wnext, std::span<const double> Wn,
                       const SchemeContext& ctx, Tridiagonal& J) {
  check_lengths(Wnext.size(), Wn.size(), "jacobian");
  resize(J, Wn.size());
  const int N = static_cast<int>(Wn.size()) - 1;
  const Blend Z{Wnext, Wn, ctx.params.theta};
#pragma omp parallel for schedule(static) if (N + 1 >= kParallelMinRows)
  for (int i = 0; i <= N; ++i) jacobian_row(i, N, Z, ctx, J);
}

void residual(Backend b, std::span<const double> Wnext, std::span<const double> Wn,
              const SchemeContext& ctx, std::span<double> out) {
  if (b == Backend::parallel) residual_parallel(Wnext, Wn, ctx, out);
  else residual_serial(Wnext, Wn, ctx, out);
}

void jacobian(Backend b, std::span<const double> Wnext, std::span<const double> Wn,
              const SchemeContext& ctx, Tridiagonal& J) {
  if (b == Backend::parallel) jacobian_parallel(Wnext, Wn, ctx, J);
  else jacobian_serial(Wnext, Wn, ctx, J);
}

void spatial_operator(Backend b, std::span<const double> Z, const SchemeContext& ctx,
                      std::span<double> out) {
  if (b == Backend::parallel) spatial_operator_parallel(Z, ctx, out);
  else spatial_operator_serial(Z, ctx, out);
}

}  // namespace kernels
}  // namespace burgers
