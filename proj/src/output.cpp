#include "burgers/output.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace burgers::io {

std::string format_number(double v) {
  if (std::isnan(v)) return {};
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15e", v);
  return buf;
}

std::string format_optional(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string{};
}

std::string trajectory_csv(const RunTrajectory& traj) {
  std::ostringstream out;
  out << kTrajectoryHeader << '\n';
  for (const LevelRecord& r : traj.levels) {
    out << r.n << ',' << format_number(r.t) << ',' << format_number(r.l2) << ','
        << format_number(r.h1_semi) << ',' << format_number(r.linf) << ',' << format_number(r.w0)
        << ',' << format_number(r.wN) << ',' << format_number(r.g0) << ',' << format_number(r.gN)
        << ',' << r.newton_iters << '\n';
  }
  return out.str();
}

std::string state_rows_csv(const std::vector<analysis::ConvergenceRow>& rows) {
  std::ostringstream out;
  out << kStateRowHeader << '\n';
  for (const auto& r : rows)
    out << r.resolution << ',' << format_number(r.err_inf) << ',' << format_optional(r.order_inf)
        << ',' << format_number(r.err_l2) << ',' << format_optional(r.order_l2) << '\n';
  return out.str();
}

std::string controller_rows_csv(const std::vector<analysis::ControllerRow>& rows) {
  std::ostringstream out;
  out << kControllerRowHeader << '\n';
  for (const auto& r : rows)
    out << r.resolution << ',' << format_number(r.err_x0) << ',' << format_optional(r.order_x0)
        << ',' << format_number(r.err_x1) << ',' << format_optional(r.order_x1) << '\n';
  return out.str();
}

std::string comparison_csv(const std::string& table_id, const baselines::Comparison& cmp) {
  std::ostringstream out;
  out << kComparisonHeader << '\n';
  for (const auto& c : cmp.checks)
    out << table_id << ',' << c.resolution << ',' << c.column << ',' << format_number(c.computed)
        << ',' << format_number(c.published) << ',' << (c.pass ? "pass" : "fail") << '\n';
  return out.str();
}

std::string panel_dat(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("panel_dat: length mismatch");
  std::ostringstream out;
  for (std::size_t i = 0; i < x.size(); ++i)
    out << format_number(x[i]) << ' ' << format_number(y[i]) << '\n';
  return out.str();
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

void write_json(const fs::path& path, const nlohmann::json& j) { write_text(path, j.dump(2) + "\n"); }

void write_panels(const fs::path& dir, const RunTrajectory& traj) {
  std::vector<double> t, l2, a0, a1;
  for (const LevelRecord& r : traj.levels) {
    t.push_back(r.t);
    l2.push_back(r.l2);
    a0.push_back(std::abs(r.g0));
    a1.push_back(std::abs(r.gN));
  }
  write_text(dir / "l2_norm.dat", panel_dat(t, l2));
  write_text(dir / "controller_x0.dat", panel_dat(t, a0));
  write_text(dir / "controller_x1.dat", panel_dat(t, a1));
}

nlohmann::json to_json(const StepVerdict& v) {
  return {{"level", v.level},
          {"satisfied", v.satisfied},
          {"first_violated", v.first_violated},
          {"k_min", v.k_min}};
}

nlohmann::json to_json(const analysis::PairResult& p) {
  auto num = [](double v) { return std::isnan(v) ? nlohmann::json(nullptr) : nlohmann::json(v); };
  nlohmann::json j{{"coarse", p.coarse},
                   {"fine", p.fine},
                   {"final_inf", num(p.state.final_inf)},
                   {"final_l2", num(p.state.final_l2)},
                   {"max_inf", num(p.state.max_inf)},
                   {"max_l2", num(p.state.max_l2)},
                   {"controller_x0", num(p.controller.at_0)},
                   {"controller_x1", num(p.controller.at_1)}};
  if (!p.ok()) j["failure"] = p.failure;
  return j;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace burgers::io
