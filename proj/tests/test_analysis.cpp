#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "burgers/analysis.hpp"
#include "burgers/errors.hpp"
#include "burgers/operators.hpp"

using namespace burgers;
using namespace burgers::analysis;

namespace {

ModelParams example51() { return ModelParams{1.0, 5.0, 1.0, 1.0, 1.0}; }

RunTrajectory stored(int N, int M, const ModelParams& p,
                     const InitialCondition& ic = InitialCondition::quadratic5()) {
  RunOptions o;
  o.store_history = true;
  o.monitors = false;
  return run(ic, make_grid(N, M, 1.0), p, o);
}

StudyPlan small_plan(Mode mode) {
  StudyPlan plan;
  plan.mode = mode;
  plan.params = example51();
  plan.ic = InitialCondition::quadratic5();
  if (mode == Mode::spatial) {
    plan.resolutions = {10, 20, 40};
    plan.fixed_other = 200;
  } else {
    plan.resolutions = {50, 100, 200};
    plan.fixed_other = 20;
  }
  return plan;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

}  // namespace

TEST_CASE("mode and metric names") {
  CHECK(parse_mode("space") == Mode::spatial);
  CHECK(parse_mode("temporal") == Mode::temporal);
  CHECK(parse_metric("max") == Metric::max_over_levels);
  CHECK(to_string(Metric::final_level) == "final_level");
  CHECK_THROWS_AS(parse_mode("diagonal"), ConfigError);
  CHECK_THROWS_AS(parse_metric("mean"), ConfigError);
}

TEST_CASE("a run compared with itself has zero error") {
  const RunTrajectory r = stored(16, 40, example51());
  REQUIRE(r.ok());
  const SelfError s = spatial_self_error(r, r);
  CHECK(s.final_inf == 0.0);
  CHECK(s.max_l2 == 0.0);
  const SelfError t = temporal_self_error(r, r);
  CHECK(t.max_inf == 0.0);
  const ControllerError c = controller_error(r, r);
  CHECK(c.at_0 == 0.0);
  CHECK(c.at_1 == 0.0);
}

TEST_CASE("injection of a refined copy gives zero error") {
  PairAccumulator acc(2, 0.25, example51(), BoundaryLaw::feedback());
  const std::vector<double> coarse{1.0, -2.0, 0.5, 3.0, 0.0};
  std::vector<double> fine(9, 77.0);
  for (std::size_t i = 0; i < coarse.size(); ++i) fine[2 * i] = coarse[i];
  acc.observe(coarse, fine);
  CHECK(acc.state().max_inf == 0.0);
  CHECK(acc.controller().at_0 == 0.0);
  CHECK(acc.levels() == 1);
  CHECK_THROWS_AS(acc.observe(coarse, std::vector<double>(8, 0.0)), std::invalid_argument);
}

TEST_CASE("zero data give zero errors and no orders") {
  ModelParams p = example51();
  p.wd = 0.0;
  RunOptions o;
  o.store_history = true;
  for (int N : {10, 20}) {
    const RunTrajectory zc =
        run(StateField{std::vector<double>(N + 1, 0.0), 0}, make_grid(N, 50, 1.0), p, o);
    const RunTrajectory zf =
        run(StateField{std::vector<double>(2 * N + 1, 0.0), 0}, make_grid(2 * N, 50, 1.0), p, o);
    const SelfError e = spatial_self_error(zc, zf);
    CHECK(e.max_inf == 0.0);
    CHECK(e.max_l2 == 0.0);
    const ControllerError c = controller_error(zc, zf);
    CHECK(c.at_0 == 0.0);
    CHECK(c.at_1 == 0.0);
    CHECK_FALSE(observed_order(e.final_inf, e.final_inf).has_value());
  }
}

TEST_CASE("observed order") {
  CHECK(*observed_order(4.0, 1.0) == doctest::Approx(2.0));
  CHECK_FALSE(observed_order(0.0, 1.0).has_value());
  CHECK_FALSE(observed_order(1.0, std::nan("")).has_value());
  // Invariant under a common scale.
  for (double s : {1e-9, 3.0, 1e7})
    CHECK(*observed_order(s * 5.0, s * 1.3) == doctest::Approx(*observed_order(5.0, 1.3)));
}

TEST_CASE("plan validation") {
  StudyPlan plan = small_plan(Mode::spatial);
  CHECK_NOTHROW(plan.validate());
  plan.resolutions = {10, 20};
  CHECK_THROWS_AS(plan.validate(), ConfigError);
  plan.resolutions = {10, 20, 30};
  CHECK_THROWS_AS(plan.validate(), ConfigError);
  plan.resolutions = {10, 20, 40};
  plan.T = -1.0;
  CHECK_THROWS_AS(plan.validate(), ConfigError);
  plan.T = 1.0;
  plan.params.nu = 0.0;
  CHECK_THROWS_AS(run_study(plan), ConfigError);
}

TEST_CASE("history comparisons need stored levels and matching grids") {
  RunOptions o;
  o.monitors = false;
  const RunTrajectory bare = run(InitialCondition::quadratic5(), make_grid(10, 10, 1.0), example51(), o);
  CHECK_THROWS_AS(spatial_self_error(bare, bare), ConfigError);
  const RunTrajectory a = stored(10, 10, example51());
  const RunTrajectory b = stored(30, 10, example51());
  CHECK_THROWS_AS(spatial_self_error(a, b), ConfigError);
  CHECK_THROWS_AS(temporal_self_error(a, b), ConfigError);
}

TEST_CASE("lockstep pairs equal the stored-history comparison") {
  for (Mode mode : {Mode::spatial, Mode::temporal}) {
    const StudyPlan plan = small_plan(mode);
    const PairResult pr = run_pair(plan, plan.resolutions[0]);
    REQUIRE(pr.ok());
    RunTrajectory a, b;
    if (mode == Mode::spatial) {
      a = stored(10, 200, plan.params);
      b = stored(20, 200, plan.params);
    } else {
      a = stored(20, 50, plan.params);
      b = stored(20, 100, plan.params);
    }
    const SelfError s = mode == Mode::spatial ? spatial_self_error(a, b) : temporal_self_error(a, b);
    const ControllerError c = controller_error(a, b, BoundaryLaw::feedback(), mode);
    CHECK(pr.state.final_inf == s.final_inf);
    CHECK(pr.state.final_l2 == s.final_l2);
    CHECK(pr.state.max_inf == s.max_inf);
    CHECK(pr.state.max_l2 == s.max_l2);
    CHECK(pr.controller.at_0 == c.at_0);
    CHECK(pr.controller.at_1 == c.at_1);
  }
}

TEST_CASE("controller error is bounded by the law's Lipschitz constant") {
  const RunTrajectory a = stored(10, 100, example51());
  const RunTrajectory b = stored(20, 100, example51());
  const SelfError s = spatial_self_error(a, b);
  const ControllerError c = controller_error(a, b);
  // |g(x) - g(y)| <= max|g'| |x - y| with the slope taken over the visited range.
  double lo = 0.0, hi = 0.0;
  for (const auto& level : a.history)
    for (double v : level) lo = std::min(lo, v), hi = std::max(hi, v);
  for (const auto& level : b.history)
    for (double v : level) lo = std::min(lo, v), hi = std::max(hi, v);
  const double m = std::max(std::abs(lo), std::abs(hi));
  const double L0 = ops::g0_slope(m, example51());
  const double L1 = std::abs(ops::gN_slope(m, example51()));
  CHECK(c.at_0 <= L0 * s.max_inf * (1 + 1e-12));
  CHECK(c.at_1 <= L1 * s.max_inf * (1 + 1e-12));
  CHECK(c.at_0 > 0.0);
}

TEST_CASE("study rows") {
  const StudyResult r = run_study(small_plan(Mode::spatial), false);
  const auto rows = r.state_rows();
  REQUIRE(rows.size() == 3u);
  CHECK(rows[0].resolution == 10);
  CHECK(std::isnan(rows[0].err_inf));
  CHECK(rows[1].resolution == 20);
  CHECK_FALSE(rows[1].order_inf.has_value());
  CHECK(rows[2].resolution == 40);
  REQUIRE(rows[2].order_inf.has_value());
  CHECK(*rows[2].order_inf > 1.5);
  const auto max_rows = r.state_rows(Metric::max_over_levels);
  CHECK(max_rows[2].err_inf >= rows[2].err_inf);
  const auto crow = r.controller_rows();
  REQUIRE(crow.size() == 3u);
  CHECK(crow[2].order_x0.has_value());

  const StudyResult rp = run_study(small_plan(Mode::spatial), true);
  CHECK(rp.state_rows()[2].err_inf == rows[2].err_inf);
}

TEST_CASE("failed pairs carry NaN and a reason") {
  StudyPlan plan = small_plan(Mode::temporal);
  plan.params.theta = 0.0;
  plan.params.nu = 0.1;
  plan.params.wd = 3.0;
  plan.ic = InitialCondition::cosine2();
  plan.T = 20.0;
  plan.resolutions = {10, 20, 40};
  plan.fixed_other = 40;
  const StudyResult r = run_study(plan);
  CHECK_FALSE(r.pairs[0].ok());
  CHECK(std::isnan(r.pairs[0].state.final_inf));
  CHECK_FALSE(r.state_rows()[1].failure.empty());
}

TEST_CASE("crank-nicolson converges faster in time than backward euler") {
  std::vector<double> orders_half, orders_one;
  for (double theta : {0.5, 1.0}) {
    StudyPlan plan = small_plan(Mode::temporal);
    plan.params.theta = theta;
    plan.resolutions = {50, 100, 200, 400, 800};
    const auto rows = run_study(plan).state_rows();
    for (const auto& row : rows)
      if (row.order_inf) (theta == 0.5 ? orders_half : orders_one).push_back(*row.order_inf);
  }
  REQUIRE(orders_half.size() == 3u);
  CHECK(median(orders_half) > median(orders_one) + 0.5);
  CHECK(median(orders_one) == doctest::Approx(1.0).epsilon(0.2));
}
