#pragma once

#include <span>

#include "burgers/grid.hpp"
#include "burgers/tridiagonal.hpp"

namespace burgers {

/// Neumann data used in the boundary rows of the scheme.
///
/// feedback:     the cubic-plus-linear laws g_0, g_N of the boundary state.
/// uncontrolled: zero flux at both ends.
/// prescribed:   externally supplied fluxes; used to evaluate the scheme on a
///               manufactured field with exact boundary data.
struct BoundaryLaw {
  enum class Kind { feedback, uncontrolled, prescribed };

  Kind kind = Kind::feedback;
  double flux0 = 0.0;
  double flux1 = 0.0;

  static BoundaryLaw feedback() { return {}; }
  static BoundaryLaw uncontrolled() { return {Kind::uncontrolled, 0.0, 0.0}; }
  static BoundaryLaw prescribed(double v0, double v1) { return {Kind::prescribed, v0, v1}; }

  double left(double z, const ModelParams& p) const;
  double right(double z, const ModelParams& p) const;
  double left_slope(double z, const ModelParams& p) const;
  double right_slope(double z, const ModelParams& p) const;
};

struct SchemeContext {
  double h = 0.0;
  double k = 0.0;
  ModelParams params;
  BoundaryLaw boundary;
};

enum class Backend { serial, parallel };

namespace kernels {

/// Rows below this count run serially even on the parallel path.
inline constexpr int kParallelMinRows = 2048;

// Every output row depends only on its own three-point stencil, so the
// OpenMP variants reproduce the serial reference bit for bit.

/// Spatial part of each row evaluated at Z (everything except δ_t⁺).
void spatial_operator_serial(std::span<const double> Z, const SchemeContext& ctx,
                             std::span<double> out);
void spatial_operator_parallel(std::span<const double> Z, const SchemeContext& ctx,
                               std::span<double> out);

/// F_i = (W_next_i - W_n_i)/k + S_i(θ W_next + (1-θ) W_n).
void residual_serial(std::span<const double> Wnext, std::span<const double> Wn,
                     const SchemeContext& ctx, std::span<double> out);
void residual_parallel(std::span<const double> Wnext, std::span<const double> Wn,
                       const SchemeContext& ctx, std::span<double> out);

/// ∂F/∂W_next into J (resized as needed).
void jacobian_serial(std::span<const double> Wnext, std::span<const double> Wn,
                     const SchemeContext& ctx, Tridiagonal& J);
void jacobian_parallel(std::span<const double> Wnext, std::span<const double> Wn,
                       const SchemeContext& ctx, Tridiagonal& J);

void residual(Backend b, std::span<const double> Wnext, std::span<const double> Wn,
              const SchemeContext& ctx, std::span<double> out);
void jacobian(Backend b, std::span<const double> Wnext, std::span<const double> Wn,
              const SchemeContext& ctx, Tridiagonal& J);
void spatial_operator(Backend b, std::span<const double> Z, const SchemeContext& ctx,
                      std::span<double> out);

}  // namespace kernels
}  // namespace burgers
