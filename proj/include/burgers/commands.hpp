#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "burgers/analysis.hpp"
#include "burgers/config.hpp"
#include "burgers/stability.hpp"

namespace burgers::cli {

namespace fs = std::filesystem;

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitNumerical = 3,
  kExitComparison = 4,
};

struct SimulateOutcome {
  RunTrajectory traj;
  std::optional<stability::DecayFit> fit;
  std::string fit_note;  // reason when no fit was possible
  nlohmann::json metadata;

  /// "unconditional", "satisfied", "violated" or "unmonitored".
  std::string stability_verdict() const;
};

/// Runs cfg and writes trajectory.csv, metadata.json and the panel files
/// into dir according to cfg.output_formats.
SimulateOutcome simulate(const RunConfig& cfg, const fs::path& dir);

int cmd_simulate(const RunConfig& cfg, std::ostream& out);

struct ConvergeOptions {
  std::vector<int> ladder;           // empty: the published ladder
  std::optional<int> fixed;          // held resolution; default from cfg
  analysis::Metric metric = analysis::Metric::final_level;
  std::vector<double> thetas;        // empty: cfg.params.theta
  analysis::Mode controller_mode = analysis::Mode::spatial;
  bool parallel = true;
};

int cmd_converge_space(const RunConfig& cfg, const ConvergeOptions& opt, std::ostream& out);
int cmd_converge_time(const RunConfig& cfg, const ConvergeOptions& opt, std::ostream& out);
int cmd_converge_controller(const RunConfig& cfg, const ConvergeOptions& opt, std::ostream& out);

/// One sweep dimension. Several keys share the same values when tied.
struct SweepAxis {
  std::vector<std::string> keys;
  std::vector<std::string> values;
};

/// Parses "key=v1,v2" or "key1,key2=v1,v2". The key "k" sets the time step
/// and is applied as grid.M = round(grid.T / k).
SweepAxis parse_sweep_axis(std::string_view text);

/// Cartesian product of the axes; an empty list gives the base point only.
std::vector<std::vector<std::pair<std::string, std::string>>> sweep_points(
    const std::vector<SweepAxis>& axes);

int cmd_sweep(const RunConfig& cfg, const std::vector<SweepAxis>& axes, std::ostream& out);

struct ProbeOptions {
  std::vector<double> multipliers{0.5, 10.0};
  // w_inf used for the step limits is this factor times ||W^0||_∞.
  double norm_factor = 1.0;
};

struct ProbeResult {
  double multiplier = 0.0;
  double k = 0.0;
  int M = 0;
  double k_min = 0.0;
  RunStatus status = RunStatus::completed;
  int failed_level = -1;
  bool bound_satisfied = true;  // k < min k_i
  // A-posteriori verdict at the last level reached; empty if no step completed.
  std::optional<bool> last_verdict_satisfied;
};

/// Throws RegimeError unless θ < 1/2.
std::vector<ProbeResult> stability_probe(const RunConfig& cfg, const ProbeOptions& opt);

int cmd_stability_probe(const RunConfig& cfg, const ProbeOptions& opt, std::ostream& out);

}  // namespace burgers::cli
