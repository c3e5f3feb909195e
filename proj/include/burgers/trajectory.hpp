#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "burgers/grid.hpp"

namespace burgers {

enum class NewtonStop { none, residual, step };

struct NewtonStats {
  int iterations = 0;
  double final_residual_inf = 0.0;
  double final_step_inf = 0.0;
  bool converged = false;
  NewtonStop stop = NewtonStop::none;
};

/// Scalars recorded at every time level.
struct LevelRecord {
  int n = 0;
  double t = 0.0;
  double l2 = 0.0;
  double h1_semi = 0.0;
  double linf = 0.0;
  double w0 = 0.0;
  double wN = 0.0;
  double g0 = 0.0;  // flux applied at x=0 for the state W^n
  double gN = 0.0;  // flux applied at x=1
  int newton_iters = 0;
  double newton_residual = 0.0;
};

/// A-posteriori stability verdict for one level in the conditional regime.
struct StepVerdict {
  int level = 0;
  bool satisfied = true;
  int first_violated = 0;  // 1..5, 0 when satisfied
  double k_min = 0.0;
};

enum class RunStatus { completed, blow_up, non_convergence, singular };

std::string_view to_string(RunStatus s);

struct RunTrajectory {
  GridSpec grid;
  ModelParams params;
  std::vector<LevelRecord> levels;
  StateField final_state;
  std::vector<std::vector<double>> history;  // one row per level, opt-in

  RunStatus status = RunStatus::completed;
  std::string failure;
  int failed_level = -1;

  std::vector<StepVerdict> verdicts;  // θ < 1/2 with monitors on
  int energy_increases = 0;           // θ >= 1/2 with monitors on
  double max_energy_increase = 0.0;

  bool ok() const noexcept { return status == RunStatus::completed; }
  bool has_history() const noexcept { return !history.empty(); }
};

}  // namespace burgers
