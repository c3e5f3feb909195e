#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "burgers/analysis.hpp"
#include "burgers/baselines.hpp"
#include "burgers/trajectory.hpp"

namespace burgers::io {

namespace fs = std::filesystem;

inline constexpr const char* kTrajectoryHeader = "n,t,l2,h1_semi,linf,W0,WN,g0,gN,newton_iters";
inline constexpr const char* kStateRowHeader = "resolution,err_inf,order_inf,err_l2,order_l2";
inline constexpr const char* kControllerRowHeader = "resolution,err_x0,order_x0,err_x1,order_x1";
inline constexpr const char* kComparisonHeader = "table,resolution,column,computed,published,pass";

/// Scientific notation with 16 significant digits; empty for absent or NaN.
std::string format_number(double v);
std::string format_optional(const std::optional<double>& v);

std::string trajectory_csv(const RunTrajectory& traj);
std::string state_rows_csv(const std::vector<analysis::ConvergenceRow>& rows);
std::string controller_rows_csv(const std::vector<analysis::ControllerRow>& rows);
std::string comparison_csv(const std::string& table_id, const baselines::Comparison& cmp);

/// Two whitespace-separated columns, one sample per line.
std::string panel_dat(std::span<const double> x, std::span<const double> y);

/// Writes text to path, creating parent directories. Throws std::runtime_error.
void write_text(const fs::path& path, const std::string& text);
void write_json(const fs::path& path, const nlohmann::json& j);

/// Figure panels of one run: l2 and absolute controller values against t.
void write_panels(const fs::path& dir, const RunTrajectory& traj);

nlohmann::json to_json(const StepVerdict& v);
nlohmann::json to_json(const analysis::PairResult& p);

/// UTC time in ISO 8601, used only inside metadata.
std::string utc_timestamp();

}  // namespace burgers::io
