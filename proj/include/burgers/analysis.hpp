#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "burgers/grid.hpp"
#include "burgers/stepper.hpp"
#include "burgers/trajectory.hpp"

namespace burgers::analysis {

enum class Mode { spatial, temporal };

/// Which levels enter a state self-error. final_level compares the last
/// common level only; max_over_levels takes the maximum over every common level.
enum class Metric { final_level, max_over_levels };

std::string_view to_string(Mode m);
std::string_view to_string(Metric m);
Mode parse_mode(std::string_view s);
Metric parse_metric(std::string_view s);

/// State self-error of a (coarse, fine) pair under both metrics.
struct SelfError {
  double final_inf = 0.0;
  double final_l2 = 0.0;
  double max_inf = 0.0;
  double max_l2 = 0.0;

  double inf(Metric m) const { return m == Metric::final_level ? final_inf : max_inf; }
  double l2(Metric m) const { return m == Metric::final_level ? final_l2 : max_l2; }
};

/// Largest difference of the applied boundary fluxes over the common levels.
struct ControllerError {
  double at_0 = 0.0;
  double at_1 = 0.0;
};

/// Accumulates both error kinds one common level at a time. The fine state is
/// restricted by taking every stride-th node: 2 for a spatial pair, 1 for a
/// temporal pair where the caller passes the coinciding fine level.
class PairAccumulator {
 public:
  PairAccumulator(std::size_t stride, double coarse_h, ModelParams params, BoundaryLaw law);

  /// Throws std::invalid_argument when the lengths do not fit the stride.
  void observe(std::span<const double> coarse, std::span<const double> fine);

  const SelfError& state() const noexcept { return state_; }
  const ControllerError& controller() const noexcept { return controller_; }
  int levels() const noexcept { return levels_; }

 private:
  std::size_t stride_;
  double h_;
  ModelParams params_;
  BoundaryLaw law_;
  std::vector<double> diff_;
  SelfError state_;
  ControllerError controller_;
  int levels_ = 0;
};

/// Pair comparisons from stored histories. Throw ConfigError when a history
/// is missing or the resolutions do not pair up.
SelfError spatial_self_error(const RunTrajectory& run_h, const RunTrajectory& run_h2);
SelfError temporal_self_error(const RunTrajectory& run_k, const RunTrajectory& run_k2);
ControllerError controller_error(const RunTrajectory& run_h, const RunTrajectory& run_h2,
                                 const BoundaryLaw& law = BoundaryLaw::feedback(),
                                 Mode mode = Mode::spatial);

/// log2(coarse/fine); empty unless both errors are positive and finite.
std::optional<double> observed_order(double err_coarse, double err_fine);

struct StudyPlan {
  Mode mode = Mode::spatial;
  std::vector<int> resolutions;  // strictly doubling, length >= 3
  int fixed_other = 0;           // M for spatial studies, N for temporal ones
  double T = 1.0;
  ModelParams params;
  InitialCondition ic;
  StepOptions step;

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

/// Errors of the pair (resolution/2, resolution) for every level-matching
/// pair in a study; failure is non-empty when either run failed.
struct PairResult {
  int coarse = 0;
  int fine = 0;
  SelfError state;
  ControllerError controller;
  std::string failure;

  bool ok() const noexcept { return failure.empty(); }
};

struct ConvergenceRow {
  int resolution = 0;
  double err_inf = 0.0;
  double err_l2 = 0.0;
  std::optional<double> order_inf;
  std::optional<double> order_l2;
  std::string failure;
};

struct ControllerRow {
  int resolution = 0;
  double err_x0 = 0.0;
  double err_x1 = 0.0;
  std::optional<double> order_x0;
  std::optional<double> order_x1;
  std::string failure;
};

struct StudyResult {
  StudyPlan plan;
  std::vector<PairResult> pairs;

  /// One row per ladder entry labelled by the resolution; the first entry has
  /// no pair and carries empty errors (NaN) like the published tables.
  std::vector<ConvergenceRow> state_rows(Metric metric = Metric::final_level) const;
  std::vector<ControllerRow> controller_rows() const;
};

/// Runs every pair of the ladder, each pair advanced in lockstep without
/// storing histories. Pairs run concurrently on the OpenMP pool when
/// parallel is set. Run failures are recorded on the pair, never thrown.
StudyResult run_study(const StudyPlan& plan, bool parallel = true);

/// A single pair, same semantics as one entry of run_study.
PairResult run_pair(const StudyPlan& plan, int coarse);

}  // namespace burgers::analysis
