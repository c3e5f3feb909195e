#include "burgers/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "burgers/errors.hpp"
#include "burgers/operators.hpp"
#include "burgers/stability.hpp"

namespace burgers {

std::string_view to_string(RunStatus s) {
  switch (s) {
    case RunStatus::completed: return "completed";
    case RunStatus::blow_up: return "blow_up";
    case RunStatus::non_convergence: return "non_convergence";
    case RunStatus::singular: return "singular";
  }
  return "unknown";
}

namespace {

double inf_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) {
    if (!std::isfinite(x)) return x;
    m = std::max(m, std::abs(x));
  }
  return m;
}

bool all_finite(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

void require_same_grid(const StateField& a, const StateField& b, const GridSpec& grid) {
  const auto n = static_cast<std::size_t>(grid.nodes());
  if (a.size() != n || b.size() != n)
    throw std::invalid_argument("state length does not match grid.N + 1");
}

SchemeContext make_context(const GridSpec& grid, const ModelParams& params,
                           const BoundaryLaw& boundary) {
  return SchemeContext{grid.h, grid.k, params, boundary};
}

}  // namespace

double SchemeResidual::inf_norm() const { return burgers::inf_norm(rows); }

SchemeResidual residual(const StateField& Wnext, const StateField& Wn, const GridSpec& grid,
                        const ModelParams& params, const BoundaryLaw& boundary) {
  require_same_grid(Wnext, Wn, grid);
  SchemeResidual r;
  r.rows.resize(Wn.size());
  kernels::residual_serial(Wnext.view(), Wn.view(), make_context(grid, params, boundary), r.rows);
  return r;
}

Tridiagonal jacobian(const StateField& Wnext, const StateField& Wn, const GridSpec& grid,
                     const ModelParams& params, const BoundaryLaw& boundary) {
  if (params.theta == 0.0) throw RegimeError("jacobian is undefined for the explicit scheme");
  require_same_grid(Wnext, Wn, grid);
  Tridiagonal J(Wn.size());
  kernels::jacobian_serial(Wnext.view(), Wn.view(), make_context(grid, params, boundary), J);
  return J;
}

NewtonStats newton_solve(std::vector<double>& x, const ResidualFn& F, const JacobianFn& J,
                         const NewtonOptions& options) {
  const std::size_t n = x.size();
  std::vector<double> f(n), dx(n), rhs(n);
  Tridiagonal jac(n);
  NewtonStats stats;

  for (int it = 0; it <= options.max_iter; ++it) {
    F(x, f);
    stats.final_residual_inf = inf_norm(f);
    stats.iterations = it;
    if (!std::isfinite(stats.final_residual_inf)) break;
    if (stats.final_residual_inf <= options.tol) {
      stats.converged = true;
      stats.stop = NewtonStop::residual;
      return stats;
    }
    if (it == options.max_iter) break;

    J(x, jac);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = -f[i];
    thomas_solve(jac, rhs, dx);
    stats.final_step_inf = inf_norm(dx);
    if (!std::isfinite(stats.final_step_inf)) break;
    for (std::size_t i = 0; i < n; ++i) x[i] += dx[i];

    if (stats.final_step_inf <= options.tol) {
      F(x, f);
      stats.final_residual_inf = inf_norm(f);
      stats.iterations = it + 1;
      stats.converged = true;
      stats.stop = NewtonStop::step;
      return stats;
    }
  }
  throw NonConvergence("Newton iteration did not converge in " +
                           std::to_string(options.max_iter) + " iterations (residual " +
                           std::to_string(stats.final_residual_inf) + ")",
                       -1);
}

Integrator::Integrator(const GridSpec& grid, const ModelParams& params, const StepOptions& options,
                       StateField initial)
    : grid_(grid),
      params_(params),
      options_(options),
      ctx_(make_context(grid, params, options.boundary)),
      state_(std::move(initial)) {
  params_.validate();
  if (state_.size() != static_cast<std::size_t>(grid_.nodes()))
    throw ConfigError("initial state has " + std::to_string(state_.size()) +
                      " values, grid.N + 1 = " + std::to_string(grid_.nodes()));
  const std::size_t n = state_.size();
  prev_.resize(n);
  work_.resize(n);
  step_.resize(n);
  jac_ = Tridiagonal(n);
}

void Integrator::advance() {
  if (done()) throw std::logic_error("Integrator::advance past the final level");
  if (params_.theta == 0.0) advance_explicit();
  else advance_implicit();
}

void Integrator::advance_explicit() {
  const int next = state_.time_index + 1;
  prev_ = state_.values;
  kernels::spatial_operator(options_.backend, prev_, ctx_, work_);
  for (std::size_t i = 0; i < prev_.size(); ++i) state_.values[i] = prev_[i] - grid_.k * work_[i];
  state_.time_index = next;
  stats_ = NewtonStats{0, 0.0, 0.0, true, NewtonStop::none};
  check_finite(next);
}

void Integrator::advance_implicit() {
  const int next = state_.time_index + 1;
  prev_ = state_.values;
  const std::span<const double> Wn = prev_;
  const Backend backend = options_.backend;
  const SchemeContext& ctx = ctx_;

  // state_.values starts from W^n as the Newton guess.
  try {
    stats_ = newton_solve(
        state_.values,
        [&](std::span<const double> x, std::span<double> f) {
          kernels::residual(backend, x, Wn, ctx, f);
        },
        [&](std::span<const double> x, Tridiagonal& J) {
          kernels::jacobian(backend, x, Wn, ctx, J);
        },
        options_.newton);
  } catch (const NonConvergence& e) {
    if (!all_finite(state_.values)) throw BlowUp("non-finite iterate at level " + std::to_string(next), next);
    throw NonConvergence(std::string(e.what()) + " at level " + std::to_string(next), next);
  } catch (const SingularTridiagonal& e) {
    throw SingularTridiagonal(std::string(e.what()) + " at level " + std::to_string(next), next);
  }
  state_.time_index = next;
  check_finite(next);
}

void Integrator::check_finite(int next_level) const {
  const double m = inf_norm(state_.values);
  if (!std::isfinite(m))
    throw BlowUp("non-finite state at level " + std::to_string(next_level), next_level);
  if (m > options_.blowup_threshold)
    throw BlowUp("state exceeds " + std::to_string(options_.blowup_threshold) + " at level " +
                     std::to_string(next_level),
                 next_level);
}

std::pair<StateField, NewtonStats> newton_step(const StateField& Wn, const GridSpec& grid,
                                               const ModelParams& params,
                                               const StepOptions& options) {
  if (params.theta == 0.0) throw RegimeError("newton_step requires theta > 0");
  // The caller's k is kept exactly rather than recomputed from T/M.
  Integrator integ(GridSpec{grid.N, Wn.time_index + 1, grid.T, grid.h, grid.k}, params, options,
                   Wn);
  integ.advance();
  return {integ.state(), integ.last_stats()};
}

StateField explicit_step(const StateField& Wn, const GridSpec& grid, const ModelParams& params,
                         const StepOptions& options) {
  ModelParams p = params;
  p.theta = 0.0;
  Integrator integ(GridSpec{grid.N, Wn.time_index + 1, grid.T, grid.h, grid.k}, p, options, Wn);
  integ.advance();
  return integ.state();
}

LevelRecord make_record(const StateField& W, const GridSpec& grid, const ModelParams& params,
                        const BoundaryLaw& boundary, const NewtonStats& stats) {
  const ops::NormReport nr = ops::norms(W.view(), grid.h);
  LevelRecord r;
  r.n = W.time_index;
  r.t = grid.t(W.time_index);
  r.l2 = nr.l2;
  r.h1_semi = nr.h1_semi;
  r.linf = nr.linf;
  r.w0 = W.values.front();
  r.wN = W.values.back();
  r.g0 = boundary.left(r.w0, params);
  r.gN = boundary.right(r.wN, params);
  r.newton_iters = stats.iterations;
  r.newton_residual = stats.final_residual_inf;
  return r;
}

RunTrajectory run(const InitialCondition& ic, const GridSpec& grid, const ModelParams& params,
                  const RunOptions& options) {
  params.validate();
  return run(sample_initial(ic, grid, params), grid, params, options);
}

RunTrajectory run(StateField initial, const GridSpec& grid, const ModelParams& params,
                  const RunOptions& options) {
  RunTrajectory traj;
  traj.grid = grid;
  traj.params = params;
  const BoundaryLaw& law = options.step.boundary;
  const bool conditional = params.theta < 0.5;

  Integrator integ(grid, params, options.step, std::move(initial));
  traj.levels.reserve(static_cast<std::size_t>(grid.M) + 1);
  traj.levels.push_back(make_record(integ.state(), grid, params, law, NewtonStats{}));
  if (options.store_history) traj.history.push_back(integ.state().values);

  while (!integ.done()) {
    try {
      integ.advance();
    } catch (const NumericalError& e) {
      traj.failure = e.what();
      traj.failed_level = e.time_index();
      if (dynamic_cast<const BlowUp*>(&e)) traj.status = RunStatus::blow_up;
      else if (dynamic_cast<const SingularTridiagonal*>(&e)) traj.status = RunStatus::singular;
      else traj.status = RunStatus::non_convergence;
      break;
    }
    const LevelRecord rec = make_record(integ.state(), grid, params, law, integ.last_stats());
    if (options.monitors) {
      if (conditional) {
        traj.verdicts.push_back(stability::check_step(params, grid, rec));
      } else {
        const double prev = traj.levels.back().l2;
        const double increase = rec.l2 * rec.l2 - prev * prev;
        if (increase > stability::kEnergySlack) {
          ++traj.energy_increases;
          traj.max_energy_increase = std::max(traj.max_energy_increase, increase);
        }
      }
    }
    traj.levels.push_back(rec);
    if (options.store_history) traj.history.push_back(integ.state().values);
  }
  traj.final_state = integ.state();
  return traj;
}

}  // namespace burgers
