#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "burgers/grid.hpp"
#include "burgers/stepper.hpp"

namespace burgers::cli {

/// Effective configuration of one run. Every field has a dotted key used in
/// config files, --set overrides and the metadata echo.
struct RunConfig {
  std::string preset = "none";  // preset.id

  int N = 100;       // grid.N
  int M = 1000;      // grid.M
  double T = 1.0;    // grid.T

  ModelParams params;  // params.nu, params.wd, params.c0, params.c1, params.theta

  InitialCondition::Kind ic_kind = InitialCondition::Kind::quadratic5;  // ic.kind
  std::vector<double> ic_values;                                        // ic.values
  bool ic_subtract_wd = false;                                          // ic.subtract_wd

  bool controlled = true;      // toggles.controlled
  bool store_history = false;  // toggles.store_history
  bool monitors = true;        // toggles.monitors

  NewtonOptions newton;  // newton.tol, newton.max_iter

  Backend backend = Backend::parallel;  // exec.backend
  double blowup_threshold = kBlowUpThreshold;  // exec.blowup_threshold

  std::string output_directory = "out";                         // output.directory
  std::vector<std::string> output_formats{"csv", "json", "dat"};  // output.formats

  /// Throws ConfigError naming the offending key.
  void validate() const;

  GridSpec grid() const;
  InitialCondition ic() const;
  BoundaryLaw boundary() const;
  StepOptions step_options() const;
  RunOptions run_options() const;
  bool wants(std::string_view format) const;
};

/// All dotted keys in a stable order.
const std::vector<std::string>& config_keys();

/// Preset expansion. Throws ConfigError for an unknown id.
RunConfig preset(std::string_view id);
const std::vector<std::string>& preset_ids();

/// Sets one key from its textual value. Lists are comma separated.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

/// Applies a flat JSON object; values may be numbers, booleans, strings or arrays.
void apply_json(RunConfig& cfg, const nlohmann::json& obj);

/// Preset first, then the file, then --set overrides in order; validated.
RunConfig load_config(const std::optional<std::string>& preset_id,
                      const std::optional<std::string>& path,
                      const std::vector<std::string>& overrides);

/// Splits "key=value"; throws ConfigError when '=' is missing.
std::pair<std::string, std::string> split_assignment(std::string_view text);

/// Flat object with every key, suitable as a config file for a re-run.
nlohmann::json to_json(const RunConfig& cfg);

std::vector<double> parse_double_list(std::string_view key, std::string_view text);
std::vector<int> parse_int_list(std::string_view key, std::string_view text);

}  // namespace burgers::cli
