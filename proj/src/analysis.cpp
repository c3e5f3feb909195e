#include "burgers/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "burgers/errors.hpp"
#include "burgers/operators.hpp"

namespace burgers::analysis {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

std::string_view to_string(Mode m) { return m == Mode::spatial ? "spatial" : "temporal"; }

std::string_view to_string(Metric m) {
  return m == Metric::final_level ? "final_level" : "max_over_levels";
}

Mode parse_mode(std::string_view s) {
  if (s == "spatial" || s == "space") return Mode::spatial;
  if (s == "temporal" || s == "time") return Mode::temporal;
  throw ConfigError("study.mode must be spatial or temporal, got '" + std::string(s) + "'");
}

Metric parse_metric(std::string_view s) {
  if (s == "final_level" || s == "final") return Metric::final_level;
  if (s == "max_over_levels" || s == "max") return Metric::max_over_levels;
  throw ConfigError("study.metric must be final_level or max_over_levels, got '" +
                    std::string(s) + "'");
}

PairAccumulator::PairAccumulator(std::size_t stride, double coarse_h, ModelParams params,
                                 BoundaryLaw law)
    : stride_(stride), h_(coarse_h), params_(params), law_(law) {}

void PairAccumulator::observe(std::span<const double> coarse, std::span<const double> fine) {
  const std::size_t n = coarse.size();
  const std::size_t stride = stride_;
  if (n < 2 || fine.size() != (n - 1) * stride + 1)
    throw std::invalid_argument("PairAccumulator: fine level does not match the coarse grid");

  diff_.resize(n);
  for (std::size_t i = 0; i < n; ++i) diff_[i] = coarse[i] - fine[i * stride];
  const ops::NormReport r = ops::norms(diff_, h_);
  state_.final_inf = r.linf;
  state_.final_l2 = r.l2;
  state_.max_inf = std::max(state_.max_inf, r.linf);
  state_.max_l2 = std::max(state_.max_l2, r.l2);

  const double d0 = std::abs(law_.left(coarse.front(), params_) - law_.left(fine.front(), params_));
  const double d1 = std::abs(law_.right(coarse.back(), params_) - law_.right(fine.back(), params_));
  controller_.at_0 = std::max(controller_.at_0, d0);
  controller_.at_1 = std::max(controller_.at_1, d1);
  ++levels_;
}

namespace {

void require_history(const RunTrajectory& r, const char* which) {
  if (!r.has_history())
    throw ConfigError(std::string(which) + " has no stored history (enable store_history)");
}

PairAccumulator accumulate(const RunTrajectory& a, const RunTrajectory& b, Mode mode,
                           const BoundaryLaw& law) {
  require_history(a, "coarse run");
  require_history(b, "fine run");
  // A run compared with itself is accepted and gives zero error.
  if (mode == Mode::spatial) {
    if (a.grid.M != b.grid.M) throw ConfigError("spatial pair needs identical grid.M");
    if (b.grid.N != 2 * a.grid.N && b.grid.N != a.grid.N)
      throw ConfigError("spatial pair needs grid.N and 2*grid.N");
    PairAccumulator acc(b.grid.N == a.grid.N ? 1 : 2, a.grid.h, a.params, law);
    const std::size_t levels = std::min(a.history.size(), b.history.size());
    for (std::size_t n = 0; n < levels; ++n) acc.observe(a.history[n], b.history[n]);
    return acc;
  }
  if (a.grid.N != b.grid.N) throw ConfigError("temporal pair needs identical grid.N");
  if (b.grid.M != 2 * a.grid.M && b.grid.M != a.grid.M)
    throw ConfigError("temporal pair needs grid.M and 2*grid.M");
  PairAccumulator acc(1, a.grid.h, a.params, law);
  const std::size_t ratio = b.grid.M == a.grid.M ? 1 : 2;
  for (std::size_t n = 0; n < a.history.size() && n * ratio < b.history.size(); ++n)
    acc.observe(a.history[n], b.history[n * ratio]);
  return acc;
}

}  // namespace

SelfError spatial_self_error(const RunTrajectory& run_h, const RunTrajectory& run_h2) {
  return accumulate(run_h, run_h2, Mode::spatial, BoundaryLaw::feedback()).state();
}

SelfError temporal_self_error(const RunTrajectory& run_k, const RunTrajectory& run_k2) {
  return accumulate(run_k, run_k2, Mode::temporal, BoundaryLaw::feedback()).state();
}

ControllerError controller_error(const RunTrajectory& run_h, const RunTrajectory& run_h2,
                                 const BoundaryLaw& law, Mode mode) {
  return accumulate(run_h, run_h2, mode, law).controller();
}

std::optional<double> observed_order(double err_coarse, double err_fine) {
  if (!(err_coarse > 0.0 && err_fine > 0.0) || !std::isfinite(err_coarse) ||
      !std::isfinite(err_fine))
    return std::nullopt;
  return std::log2(err_coarse / err_fine);
}

void StudyPlan::validate() const {
  if (resolutions.size() < 3) throw ConfigError("study.resolutions needs at least 3 entries");
  if (resolutions.front() < 1) throw ConfigError("study.resolutions must be positive");
  for (std::size_t j = 1; j < resolutions.size(); ++j)
    if (resolutions[j] != 2 * resolutions[j - 1])
      throw ConfigError("study.resolutions must double at every step");
  if (mode == Mode::spatial && resolutions.front() < 2)
    throw ConfigError("study.resolutions must start at grid.N >= 2 for a spatial study");
  if (fixed_other < (mode == Mode::spatial ? 1 : 2))
    throw ConfigError(mode == Mode::spatial ? "grid.M must be >= 1" : "grid.N must be >= 2");
  if (!(T > 0.0) || !std::isfinite(T)) throw ConfigError("grid.T must be positive");
  params.validate();
}

PairResult run_pair(const StudyPlan& plan, int coarse) {
  PairResult out;
  out.coarse = coarse;
  out.fine = 2 * coarse;
  const bool spatial = plan.mode == Mode::spatial;
  try {
    const GridSpec gc = spatial ? make_grid(coarse, plan.fixed_other, plan.T)
                                : make_grid(plan.fixed_other, coarse, plan.T);
    const GridSpec gf = spatial ? make_grid(2 * coarse, plan.fixed_other, plan.T)
                                : make_grid(plan.fixed_other, 2 * coarse, plan.T);
    Integrator a(gc, plan.params, plan.step, sample_initial(plan.ic, gc, plan.params));
    Integrator b(gf, plan.params, plan.step, sample_initial(plan.ic, gf, plan.params));
    PairAccumulator acc(spatial ? 2 : 1, gc.h, plan.params, plan.step.boundary);

    acc.observe(a.state().view(), b.state().view());
    while (!a.done()) {
      a.advance();
      b.advance();
      if (!spatial) b.advance();
      acc.observe(a.state().view(), b.state().view());
    }
    out.state = acc.state();
    out.controller = acc.controller();
  } catch (const NumericalError& e) {
    out.failure = e.what();
  } catch (const ConfigError& e) {
    out.failure = e.what();
  }
  if (!out.ok()) {
    out.state = SelfError{kNaN, kNaN, kNaN, kNaN};
    out.controller = ControllerError{kNaN, kNaN};
  }
  return out;
}

StudyResult run_study(const StudyPlan& plan, bool parallel) {
  plan.validate();
  StudyResult result;
  result.plan = plan;
  const int pairs = static_cast<int>(plan.resolutions.size()) - 1;
  result.pairs.resize(static_cast<std::size_t>(pairs));

  // Largest pairs first so the dynamic schedule balances the load.
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (int j = pairs - 1; j >= 0; --j)
    result.pairs[static_cast<std::size_t>(j)] = run_pair(plan, plan.resolutions[j]);
  return result;
}

std::vector<ConvergenceRow> StudyResult::state_rows(Metric metric) const {
  std::vector<ConvergenceRow> rows;
  if (plan.resolutions.empty()) return rows;
  rows.push_back(ConvergenceRow{plan.resolutions.front(), kNaN, kNaN, {}, {}, {}});
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    ConvergenceRow r;
    r.resolution = pairs[j].fine;
    r.err_inf = pairs[j].state.inf(metric);
    r.err_l2 = pairs[j].state.l2(metric);
    r.failure = pairs[j].failure;
    if (j > 0) {
      r.order_inf = observed_order(pairs[j - 1].state.inf(metric), r.err_inf);
      r.order_l2 = observed_order(pairs[j - 1].state.l2(metric), r.err_l2);
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<ControllerRow> StudyResult::controller_rows() const {
  std::vector<ControllerRow> rows;
  if (plan.resolutions.empty()) return rows;
  rows.push_back(ControllerRow{plan.resolutions.front(), kNaN, kNaN, {}, {}, {}});
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    ControllerRow r;
    r.resolution = pairs[j].fine;
    r.err_x0 = pairs[j].controller.at_0;
    r.err_x1 = pairs[j].controller.at_1;
    r.failure = pairs[j].failure;
    if (j > 0) {
      r.order_x0 = observed_order(pairs[j - 1].controller.at_0, r.err_x0);
      r.order_x1 = observed_order(pairs[j - 1].controller.at_1, r.err_x1);
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace burgers::analysis
