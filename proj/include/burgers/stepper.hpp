#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "burgers/grid.hpp"
#include "burgers/kernels.hpp"
#include "burgers/trajectory.hpp"
#include "burgers/tridiagonal.hpp"

namespace burgers {

struct NewtonOptions {
  double tol = 1e-12;
  int max_iter = 50;
};

inline constexpr double kBlowUpThreshold = 1e8;

struct StepOptions {
  NewtonOptions newton;
  BoundaryLaw boundary = BoundaryLaw::feedback();
  Backend backend = Backend::parallel;
  double blowup_threshold = kBlowUpThreshold;
};

/// Rows F_0..F_N of the θ-scheme at a candidate next level.
struct SchemeResidual {
  std::vector<double> rows;

  double inf_norm() const;
};

SchemeResidual residual(const StateField& Wnext, const StateField& Wn, const GridSpec& grid,
                        const ModelParams& params,
                        const BoundaryLaw& boundary = BoundaryLaw::feedback());

/// ∂F/∂W_next. Throws RegimeError for θ = 0.
Tridiagonal jacobian(const StateField& Wnext, const StateField& Wn, const GridSpec& grid,
                     const ModelParams& params,
                     const BoundaryLaw& boundary = BoundaryLaw::feedback());

using ResidualFn = std::function<void(std::span<const double> x, std::span<double> F)>;
using JacobianFn = std::function<void(std::span<const double> x, Tridiagonal& J)>;

/// Newton iteration on a tridiagonal nonlinear system, in place on x.
/// Stops when ||F||_∞ <= tol or ||Δx||_∞ <= tol. Throws NonConvergence
/// when the budget is spent and SingularTridiagonal on a zero pivot.
NewtonStats newton_solve(std::vector<double>& x, const ResidualFn& F, const JacobianFn& J,
                         const NewtonOptions& options);

/// One implicit step (θ > 0) started from W^n.
std::pair<StateField, NewtonStats> newton_step(const StateField& Wn, const GridSpec& grid,
                                               const ModelParams& params,
                                               const StepOptions& options = {});

/// One explicit step (θ = 0). Throws BlowUp on a non-finite result.
StateField explicit_step(const StateField& Wn, const GridSpec& grid, const ModelParams& params,
                         const StepOptions& options = {});

/// Advances one trajectory level by level, reusing its work buffers.
/// Used directly by studies that compare runs in lockstep.
class Integrator {
 public:
  Integrator(const GridSpec& grid, const ModelParams& params, const StepOptions& options,
             StateField initial);

  /// Moves to level n+1. Throws BlowUp, NonConvergence or SingularTridiagonal
  /// carrying the index of the level being computed.
  void advance();

  const StateField& state() const noexcept { return state_; }
  int level() const noexcept { return state_.time_index; }
  bool done() const noexcept { return state_.time_index >= grid_.M; }
  const NewtonStats& last_stats() const noexcept { return stats_; }
  const GridSpec& grid() const noexcept { return grid_; }
  const ModelParams& params() const noexcept { return params_; }
  const StepOptions& options() const noexcept { return options_; }

 private:
  void advance_explicit();
  void advance_implicit();
  void check_finite(int next_level) const;

  GridSpec grid_;
  ModelParams params_;
  StepOptions options_;
  SchemeContext ctx_;
  StateField state_;
  std::vector<double> prev_;
  std::vector<double> work_;
  std::vector<double> step_;
  Tridiagonal jac_;
  NewtonStats stats_;
};

struct RunOptions {
  StepOptions step;
  bool store_history = false;
  bool monitors = true;
};

/// Full time loop. Numerical failures end the run early; the partial
/// trajectory is kept and the status says why.
RunTrajectory run(const InitialCondition& ic, const GridSpec& grid, const ModelParams& params,
                  const RunOptions& options = {});
RunTrajectory run(StateField initial, const GridSpec& grid, const ModelParams& params,
                  const RunOptions& options = {});

/// Scalars for one level as stored in RunTrajectory.
LevelRecord make_record(const StateField& W, const GridSpec& grid, const ModelParams& params,
                        const BoundaryLaw& boundary, const NewtonStats& stats);

}  // namespace burgers
