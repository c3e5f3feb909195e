#include "burgers/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "burgers/errors.hpp"
#include "burgers/operators.hpp"

namespace burgers::stability {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double safe_ratio(double num, double den) { return den > 0.0 ? num / den : kInf; }
}  // namespace

double StabilityBounds::k_min() const {
  if (k_limits.empty()) return kInf;
  return *std::min_element(k_limits.begin(), k_limits.end());
}

double alpha_bound(const ModelParams& p) {
  if (p.theta < 0.5) throw RegimeError("alpha_bound requires theta >= 1/2");
  const double m = std::min({p.nu, (p.c0 + p.wd) / 2.0, (p.c1 + 3.0 * p.wd) / 2.0});
  return p.theta * p.theta / 2.0 * m;
}

StabilityBounds k_limits(const ModelParams& p, const GridSpec& grid, double w_inf) {
  StabilityBounds b;
  if (p.theta >= 0.5) {
    b.regime = Regime::unconditional;
    b.alpha_max = alpha_bound(p);
    return b;
  }
  b.regime = Regime::conditional;
  const double h = grid.h;
  const double k = grid.k;
  const double s = 1.0 - 2.0 * p.theta;
  const double w2 = w_inf * w_inf;

  const double k1 = 12.0 * p.nu * h * h /
                    (s * (108.0 * p.nu * p.nu + 18.0 * h * h * p.wd * p.wd + 19.0 * h * h * w2));
  const double k2 = safe_ratio(h, s * 24.0 * (p.c0 + p.wd));
  const double k3 = safe_ratio(9.0 * p.c0 * h, s * 32.0 * w2);
  const double k4 = safe_ratio(h, s * 24.0 * (p.c1 + p.wd));
  const double k5 = safe_ratio(9.0 * p.c1 * h, s * 32.0 * w2);
  b.k_limits = {k1, k2, k3, k4, k5};

  const double beta1 = 2.0 * p.nu - k * s * (18.0 * p.nu * p.nu / (h * h) + 3.0 * p.wd * p.wd +
                                              19.0 / 6.0 * w2);
  const double beta2 = (p.c0 + p.wd) - k * s * 24.0 / h * (p.c0 + p.wd) * (p.c0 + p.wd);
  const double beta3 = 1.0 / (3.0 * p.c0) - k * s * 32.0 / (27.0 * p.c0 * p.c0 * h) * w2;
  const double beta4 = (p.c1 + p.wd) - k * s * 24.0 / h * (p.c1 + p.wd) * (p.c1 + p.wd);
  const double beta5 = 1.0 / (3.0 * p.c1) - k * s * 32.0 / (27.0 * p.c1 * p.c1 * h) * w2;
  b.betas = {beta1, beta2, beta3, beta4, beta5};

  b.alpha_max = std::max(0.0, p.theta * p.theta / 4.0 * std::min({beta1, beta2, beta4}));
  return b;
}

StabilityBounds a_priori_bounds(const ModelParams& params, const GridSpec& grid,
                                std::span<const double> Wn) {
  return k_limits(params, grid, kAPrioriFactor * ops::max_abs(Wn));
}

StepVerdict check_step(const ModelParams& params, const GridSpec& grid, const LevelRecord& level) {
  if (params.theta >= 0.5) throw RegimeError("check_step applies only to theta < 1/2");
  const StabilityBounds b = k_limits(params, grid, level.linf);
  StepVerdict v;
  v.level = level.n;
  v.k_min = b.k_min();
  for (std::size_t i = 0; i < b.k_limits.size(); ++i) {
    if (!(grid.k < b.k_limits[i])) {
      v.satisfied = false;
      v.first_violated = static_cast<int>(i) + 1;
      break;
    }
  }
  return v;
}

namespace {
double beta_star_impl(const ModelParams& p, double k, double alpha, double C) {
  const double decay = std::exp(-2.0 * alpha * k);
  const double loss = (1.0 - decay) / k;
  const double t2 = p.theta * p.theta;
  return std::min({t2 * p.nu * decay - loss,
                   decay * t2 * (p.c0 + p.wd - 2.0 * C) / 2.0 - loss,
                   decay * t2 * (p.c1 + 3.0 * p.wd - 2.0 * C) / 2.0 - loss});
}
}  // namespace

double beta_star(const ModelParams& params, double k, double alpha) {
  return beta_star_impl(params, k, alpha, 0.0);
}

double beta_star_error(const ModelParams& params, double k, double alpha, double C) {
  return beta_star_impl(params, k, alpha, C);
}

DecayFit fit_decay(std::span<const double> t, std::span<const double> norm,
                   double window_fraction) {
  if (t.size() != norm.size()) throw std::invalid_argument("fit_decay: length mismatch");
  if (!(window_fraction > 0.0 && window_fraction <= 1.0))
    throw std::invalid_argument("fit_decay: window fraction must lie in (0, 1]");

  const std::size_t count = t.size();
  const auto first = static_cast<std::size_t>(
      std::floor((1.0 - window_fraction) * static_cast<double>(count)));

  std::vector<double> xs, ys;
  for (std::size_t i = first; i < count; ++i) {
    if (norm[i] > 0.0 && std::isfinite(norm[i])) {
      xs.push_back(t[i]);
      ys.push_back(std::log(norm[i]));
    }
  }
  if (xs.size() < 3)
    throw InsufficientData("fit_decay: need at least 3 levels with positive norm in the window");

  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (!(sxx > 0.0)) throw InsufficientData("fit_decay: window spans a single time");

  const bool flat = std::all_of(ys.begin(), ys.end(), [&](double y) { return y == ys.front(); });
  const double slope = flat ? 0.0 : sxy / sxx;
  const double intercept = my - slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (intercept + slope * xs[i]);
    ss_res += r * r;
  }

  DecayFit fit;
  fit.alpha_hat = slope == 0.0 ? 0.0 : -slope;
  fit.t_start = xs.front();
  fit.t_end = xs.back();
  fit.samples = static_cast<int>(xs.size());
  // A flat series is fitted exactly by a zero slope.
  fit.r_squared = flat || !(syy > 0.0) ? 1.0 : 1.0 - ss_res / syy;
  return fit;
}

DecayFit fit_decay(const RunTrajectory& traj, double window_fraction) {
  std::vector<double> t, norm;
  t.reserve(traj.levels.size());
  norm.reserve(traj.levels.size());
  for (const LevelRecord& r : traj.levels) {
    t.push_back(r.t);
    norm.push_back(r.l2);
  }
  return fit_decay(t, norm, window_fraction);
}

}  // namespace burgers::stability
