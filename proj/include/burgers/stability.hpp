#pragma once

#include <span>
#include <vector>

#include "burgers/grid.hpp"
#include "burgers/trajectory.hpp"

namespace burgers::stability {

enum class Regime { unconditional, conditional };

/// Decay-exponent bound and, for θ < 1/2, the time-step limits k_1..k_5 with
/// the coefficients β_1..β_5 at the current k.
struct StabilityBounds {
  Regime regime = Regime::unconditional;
  double alpha_max = 0.0;
  std::vector<double> k_limits;  // empty in the unconditional regime
  std::vector<double> betas;     // empty in the unconditional regime

  /// min k_i, +inf when unconditional.
  double k_min() const;
};

/// Slack allowed on ||W^{n+1}||² - ||W^n||² for θ >= 1/2 runs.
inline constexpr double kEnergySlack = 1e-10;

/// Safety factor on ||W^n||_∞ used as the a-priori proxy for ||W^{n+θ}||_∞.
inline constexpr double kAPrioriFactor = 2.0;

/// (θ²/2) min{ν, (c0+wd)/2, (c1+3wd)/2}. Throws RegimeError for θ < 1/2.
double alpha_bound(const ModelParams& params);

/// Unconditional bounds for θ >= 1/2; otherwise k_1..k_5 and β_1..β_5 with
/// w_inf standing in for ||W^{n+θ}||_∞.
StabilityBounds k_limits(const ModelParams& params, const GridSpec& grid, double w_inf);

/// k_limits with w_inf = kAPrioriFactor * ||W^n||_∞.
StabilityBounds a_priori_bounds(const ModelParams& params, const GridSpec& grid,
                                std::span<const double> Wn);

/// A-posteriori check of k < min k_i using the level's achieved max norm.
/// Throws RegimeError for θ >= 1/2.
StepVerdict check_step(const ModelParams& params, const GridSpec& grid, const LevelRecord& level);

/// β* of the unconditional energy estimate. Diagnostic only.
double beta_star(const ModelParams& params, double k, double alpha);

/// β*¹ of the error estimate; the generic constant C must be supplied.
double beta_star_error(const ModelParams& params, double k, double alpha, double C);

struct DecayFit {
  double alpha_hat = 0.0;
  double t_start = 0.0;
  double t_end = 0.0;
  double r_squared = 0.0;
  int samples = 0;
};

inline constexpr double kDefaultDecayWindow = 0.5;

/// Least-squares line through (t_n, ln ||W^n||) over the trailing
/// window_fraction of levels; alpha_hat is minus the slope. Levels with a zero
/// norm are skipped. Throws InsufficientData with fewer than three samples.
DecayFit fit_decay(const RunTrajectory& traj, double window_fraction = kDefaultDecayWindow);
DecayFit fit_decay(std::span<const double> t, std::span<const double> norm,
                   double window_fraction = kDefaultDecayWindow);

}  // namespace burgers::stability
