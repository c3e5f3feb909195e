#pragma once

#include <span>
#include <vector>

#include "burgers/grid.hpp"

namespace burgers::ops {

// Difference operators on a grid function W_0..W_N with spacing h.
// Index arguments are range-checked and throw std::out_of_range.

double dx_forward(std::span<const double> W, double h, int i);   // i in [0, N-1]
double dx_backward(std::span<const double> W, double h, int i);  // i in [1, N]
double dx_central(std::span<const double> W, double h, int i);   // i in [1, N-1]
double dx2_interior(std::span<const double> W, double h, int i); // i in [1, N-1]

/// Pointwise W^{n+θ} = θ W^{n+1} + (1-θ) W^n.
std::vector<double> theta_combine(std::span<const double> Wn, std::span<const double> Wnp1,
                                  double theta);

/// Skew-symmetric splitting of w w_x, one-sided at the two ends.
double phi(std::span<const double> W, double h, int i);
std::vector<double> phi_field(std::span<const double> W, double h);

/// Feedback laws realised on the grid. Both vanish at zero.
double g0_eval(double W0, const ModelParams& p);
double gN_eval(double WN, const ModelParams& p);
double g0_slope(double W0, const ModelParams& p);
double gN_slope(double WN, const ModelParams& p);

enum class End { left, right };

/// Second difference at x=0 or x=1 with the Neumann flux folded in.
double dx2_boundary(std::span<const double> W, double h, const ModelParams& p, End end);

/// Trapezoid-weighted (W,V) and the right-sided (W,V)_h over indices 1..N.
double inner_l2(std::span<const double> W, std::span<const double> V, double h);
double inner_h(std::span<const double> W, std::span<const double> V, double h);

struct NormReport {
  double l2 = 0.0;       // ||W||
  double lh = 0.0;       // ||W||_h
  double linf = 0.0;     // max |W_i|
  double h1_semi = 0.0;  // ||δ⁻W||_h
};

NormReport norms(std::span<const double> W, double h);
double max_abs(std::span<const double> W);

// Quantities appearing in the discrete energy identities. Exposed so the
// property suite can check them against their closed forms.

/// (h/2) δ⁺W_0 W_0 + h Σ δᶜW_i W_i + (h/2) δ⁻W_N W_N.
double transport_form(std::span<const double> W, double h);

/// (h/2)(δ²W_0)² + h Σ (δ²W_i)² + (h/2)(δ²W_N)², boundary rows via dx2_boundary.
double second_difference_energy(std::span<const double> W, double h, const ModelParams& p);

/// (h/2)(δ⁺W_0)² + h Σ (δᶜW_i)² + (h/2)(δ⁻W_N)².
double first_difference_energy(std::span<const double> W, double h);

/// ||W||_1² = ||δ⁻W||_h² + W_0² + W_N² + W_0⁴ + W_N⁴. Not homogeneous; used
/// only as a logged diagnostic of the initial data.
double norm1_squared(std::span<const double> W, double h);

}  // namespace burgers::ops
