#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "burgers/errors.hpp"
#include "burgers/stability.hpp"
#include "burgers/stepper.hpp"

using namespace burgers;
using namespace burgers::stability;

namespace {
GridSpec mesh(int N, double k) { return GridSpec{N, 1, k, 1.0 / N, k}; }
}  // namespace

TEST_CASE("alpha bound hand values") {
  CHECK(alpha_bound(ModelParams{1.0, 5.0, 1.0, 1.0, 1.0}) == doctest::Approx(0.5));
  CHECK(alpha_bound(ModelParams{0.1, 3.0, 1.0, 1.0, 0.5}) == doctest::Approx(0.0125));
  const ModelParams a{0.4, 1.0, 2.0, 0.5, 0.5};
  ModelParams b = a;
  b.theta = 1.0;
  CHECK(alpha_bound(b) == doctest::Approx(4.0 * alpha_bound(a)));
  CHECK_THROWS_AS(alpha_bound(ModelParams{1.0, 0.0, 1.0, 1.0, 0.3}), RegimeError);
}

TEST_CASE("time step limits hand values") {
  const StabilityBounds b = k_limits(ModelParams{1.0, 0.0, 1.0, 1.0, 0.0}, mesh(10, 1e-4), 1.0);
  REQUIRE(b.regime == Regime::conditional);
  REQUIRE(b.k_limits.size() == 5u);
  REQUIRE(b.betas.size() == 5u);
  CHECK(b.k_limits[0] == doctest::Approx(0.12 / 108.19).epsilon(1e-12));
  CHECK(b.k_limits[0] == doctest::Approx(1.1092e-3).epsilon(1e-4));
  CHECK(b.k_limits[1] == doctest::Approx(0.1 / 24.0).epsilon(1e-12));
  CHECK(b.k_min() == b.k_limits[0]);
  for (double k : b.k_limits) CHECK(k > 0.0);
}

TEST_CASE("limits open up as theta approaches one half") {
  const ModelParams p{0.3, 2.0, 1.0, 1.5, 0.5 - 1e-12};
  const StabilityBounds near = k_limits(p, mesh(20, 1e-3), 3.0);
  ModelParams q = p;
  q.theta = 0.25;
  const StabilityBounds far = k_limits(q, mesh(20, 1e-3), 3.0);
  for (std::size_t i = 0; i < 5; ++i) CHECK(near.k_limits[i] > 1e6 * far.k_limits[i]);

  const StabilityBounds un = k_limits(ModelParams{0.3, 2.0, 1.0, 1.5, 0.5}, mesh(20, 1e-3), 3.0);
  CHECK(un.regime == Regime::unconditional);
  CHECK(std::isinf(un.k_min()));
  CHECK(un.k_limits.empty());
}

TEST_CASE("zero state leaves the cubic limits unbounded") {
  const ModelParams p{0.1, 3.0, 1.0, 1.0, 0.0};
  const GridSpec g = mesh(20, 1e-4);
  const StabilityBounds b = k_limits(p, g, 0.0);
  CHECK(std::isfinite(b.k_limits[0]));
  CHECK(std::isinf(b.k_limits[2]));
  CHECK(std::isinf(b.k_limits[4]));

  LevelRecord zero;
  zero.n = 3;
  const StepVerdict v = check_step(p, g, zero);
  CHECK(v.level == 3);
  CHECK(v.satisfied);
  CHECK(v.first_violated == 0);

  LevelRecord big;
  big.linf = 1e4;
  const StepVerdict w = check_step(p, g, big);
  CHECK_FALSE(w.satisfied);
  CHECK(w.first_violated == 1);

  CHECK_THROWS_AS(check_step(ModelParams{0.1, 3.0, 1.0, 1.0, 0.5}, g, zero), RegimeError);
}

TEST_CASE("a priori proxy doubles the max norm") {
  const ModelParams p{0.5, 1.0, 1.0, 1.0, 0.2};
  const GridSpec g = mesh(8, 1e-4);
  const std::vector<double> W{0.0, -1.5, 0.3, 1.0, 0.0, 0.0, 0.0, 0.0, 0.2};
  const auto a = a_priori_bounds(p, g, W);
  const auto b = k_limits(p, g, 3.0);
  CHECK(a.k_limits == b.k_limits);
}

TEST_CASE("k1 against nu follows its closed-form shape") {
  // k1 = 12νh² / (s(108ν² + h²c)) rises while 108ν² < h²c and falls after.
  for (double h : {0.1, 0.02}) {
    for (double wd : {0.0, 1.0, 4.0}) {
      for (double w : {0.5, 2.0, 20.0}) {
        const double peak = h * std::sqrt((18.0 * wd * wd + 19.0 * w * w) / 108.0);
        double prev = 0.0;
        for (double nu = 1e-4; nu < 10.0; nu *= 1.3) {
          const GridSpec g = mesh(static_cast<int>(std::lround(1.0 / h)), 1e-4);
          const double k1 = k_limits(ModelParams{nu, wd, 1.0, 1.0, 0.0}, g, w).k_limits[0];
          if (prev > 0.0) {
            if (nu <= peak) CHECK(k1 > prev);
            if (nu / 1.3 >= peak) CHECK(k1 < prev);
          }
          prev = k1;
        }
      }
    }
  }
}

TEST_CASE("fit_decay on synthetic data") {
  std::vector<double> t, e, c;
  for (int n = 0; n <= 100; ++n) {
    t.push_back(0.01 * n);
    e.push_back(std::exp(-2.0 * 0.01 * n));
    c.push_back(3.0);
  }
  const DecayFit fe = fit_decay(t, e);
  CHECK(fe.alpha_hat == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(fe.r_squared == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fe.t_start == doctest::Approx(0.5));
  CHECK(fe.t_end == doctest::Approx(1.0));
  CHECK(fe.samples == 51);

  const DecayFit fc = fit_decay(t, c);
  CHECK(fc.alpha_hat == 0.0);

  const std::vector<double> t2{0.0, 1.0}, n2{1.0, 0.5};
  CHECK_THROWS_AS(fit_decay(t2, n2), InsufficientData);
  const std::vector<double> zeros(101, 0.0);
  CHECK_THROWS_AS(fit_decay(t, zeros), InsufficientData);
}

TEST_CASE("controlled run decays") {
  const ModelParams p{1.0, 5.0, 1.0, 1.0, 1.0};
  const RunTrajectory traj = run(InitialCondition::quadratic5(), make_grid(40, 400, 1.0), p);
  REQUIRE(traj.ok());
  CHECK(traj.energy_increases == 0);
  const DecayFit f = fit_decay(traj);
  CHECK(f.alpha_hat > 0.0);
  CHECK(f.r_squared > 0.9);
}

TEST_CASE("stability diagnostics") {
  const ModelParams p{1.0, 5.0, 1.0, 1.0, 1.0};
  CHECK(beta_star(p, 1e-3, 0.0) == doctest::Approx(1.0));
  CHECK(beta_star_error(p, 1e-3, 0.0, 0.5) <= beta_star(p, 1e-3, 0.0));
  CHECK(beta_star(p, 1e-3, 0.5) < beta_star(p, 1e-3, 0.0));
}
