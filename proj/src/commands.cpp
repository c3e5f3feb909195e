#include "burgers/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "burgers/baselines.hpp"
#include "burgers/errors.hpp"
#include "burgers/operators.hpp"
#include "burgers/output.hpp"

namespace burgers::cli {

namespace {

using nlohmann::json;

json num_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json stability_json(const RunConfig& cfg, const RunTrajectory& traj) {
  json s;
  const GridSpec grid = cfg.grid();
  if (cfg.params.theta >= 0.5) {
    s["regime"] = "unconditional";
    s["alpha_bound"] = stability::alpha_bound(cfg.params);
    s["energy_slack"] = stability::kEnergySlack;
    s["energy_increases"] = traj.energy_increases;
    s["max_energy_increase"] = traj.max_energy_increase;
    return s;
  }
  s["regime"] = "conditional";
  const auto initial = sample_initial(cfg.ic(), grid, cfg.params);
  const auto b = stability::a_priori_bounds(cfg.params, grid, initial.view());
  s["a_priori_norm_factor"] = stability::kAPrioriFactor;
  s["a_priori_k_limits"] = b.k_limits;
  s["a_priori_k_min"] = b.k_min();
  s["a_priori_betas"] = b.betas;
  s["a_priori_alpha_max"] = b.alpha_max;
  s["k"] = grid.k;
  int violated = 0;
  json first = nullptr;
  json violations = json::array();
  for (const StepVerdict& v : traj.verdicts) {
    if (v.satisfied) continue;
    ++violated;
    if (first.is_null()) first = io::to_json(v);
    if (violations.size() < 20) violations.push_back(io::to_json(v));
  }
  s["levels_checked"] = traj.verdicts.size();
  s["levels_violated"] = violated;
  s["first_violation"] = first;
  s["violations_sample"] = violations;
  return s;
}

bool same(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); }

// The published tables all use the quadratic5 example with unit gains.
bool published_setup(const RunConfig& cfg) {
  return cfg.ic_kind == InitialCondition::Kind::quadratic5 && cfg.controlled &&
         same(cfg.params.nu, 1.0) && same(cfg.params.wd, 5.0) && same(cfg.params.c0, 1.0) &&
         same(cfg.params.c1, 1.0) && same(cfg.T, 1.0);
}

analysis::StudyPlan make_plan(const RunConfig& cfg, analysis::Mode mode,
                              const std::vector<int>& ladder, int fixed, double theta) {
  analysis::StudyPlan plan;
  plan.mode = mode;
  plan.resolutions = ladder;
  plan.fixed_other = fixed;
  plan.T = cfg.T;
  plan.params = cfg.params;
  plan.params.theta = theta;
  plan.ic = cfg.ic();
  plan.step = cfg.step_options();
  if (cfg.ic_kind == InitialCondition::Kind::tabulated)
    throw ConfigError("ic.kind: tabulated data cannot be resampled across a ladder");
  return plan;
}

std::string fmt_opt(const std::optional<double>& v) {
  if (!v) return "--";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", *v);
  return buf;
}

std::string fmt_err(double v) {
  if (std::isnan(v)) return "--";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

void print_state_rows(std::ostream& out, const std::vector<analysis::ConvergenceRow>& rows) {
  out << "resolution  err_inf     order  err_l2      order\n";
  for (const auto& r : rows) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-10d  %-10s  %-5s  %-10s  %-5s%s%s\n", r.resolution,
                  fmt_err(r.err_inf).c_str(), fmt_opt(r.order_inf).c_str(),
                  fmt_err(r.err_l2).c_str(), fmt_opt(r.order_l2).c_str(),
                  r.failure.empty() ? "" : "  FAILED: ", r.failure.c_str());
    out << buf;
  }
}

void print_controller_rows(std::ostream& out, const std::vector<analysis::ControllerRow>& rows) {
  out << "resolution  err_x0      order  err_x1      order\n";
  for (const auto& r : rows) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-10d  %-10s  %-5s  %-10s  %-5s%s%s\n", r.resolution,
                  fmt_err(r.err_x0).c_str(), fmt_opt(r.order_x0).c_str(),
                  fmt_err(r.err_x1).c_str(), fmt_opt(r.order_x1).c_str(),
                  r.failure.empty() ? "" : "  FAILED: ", r.failure.c_str());
    out << buf;
  }
}

void print_comparison(std::ostream& out, const std::string& id, const baselines::Comparison& c) {
  out << "comparison against " << id << ": " << (c.pass() ? "PASS" : "FAIL") << "\n";
  for (const auto& ch : c.checks) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "  %-6d %-8s computed %-12.4g published %-12.4g %s\n",
                  ch.resolution, ch.column.c_str(), ch.computed, ch.published,
                  ch.pass ? "pass" : "fail");
    out << buf;
  }
}

json study_manifest(const RunConfig& cfg, const analysis::StudyResult& r, const char* command,
                    analysis::Metric metric) {
  json j;
  j["command"] = command;
  j["config"] = to_json(cfg);
  j["study"] = {{"mode", std::string(analysis::to_string(r.plan.mode))},
                {"resolutions", r.plan.resolutions},
                {"fixed_other", r.plan.fixed_other},
                {"theta", r.plan.params.theta},
                {"metric", std::string(analysis::to_string(metric))},
                {"row_label", "fine resolution of each (coarse, fine) pair"}};
  json pairs = json::array();
  for (const auto& p : r.pairs) pairs.push_back(io::to_json(p));
  j["pairs"] = pairs;
  j["created_utc"] = io::utc_timestamp();
  return j;
}

bool any_failed(const analysis::StudyResult& r) {
  return std::any_of(r.pairs.begin(), r.pairs.end(), [](const auto& p) { return !p.ok(); });
}

int exit_for(bool numerical_failure, std::optional<bool> comparison_pass) {
  if (numerical_failure) return kExitNumerical;
  if (comparison_pass && !*comparison_pass) return kExitComparison;
  return kExitOk;
}

std::string theta_tag(double theta) {
  std::ostringstream s;
  s << "theta_" << theta;
  return s.str();
}

}  // namespace

std::string SimulateOutcome::stability_verdict() const {
  if (traj.params.theta >= 0.5) return "unconditional";
  if (traj.verdicts.empty()) return "unmonitored";
  const bool ok = std::all_of(traj.verdicts.begin(), traj.verdicts.end(),
                              [](const StepVerdict& v) { return v.satisfied; });
  return ok ? "satisfied" : "violated";
}

SimulateOutcome simulate(const RunConfig& cfg, const fs::path& dir) {
  cfg.validate();
  SimulateOutcome o;
  const GridSpec grid = cfg.grid();
  o.traj = run(cfg.ic(), grid, cfg.params, cfg.run_options());
  try {
    o.fit = stability::fit_decay(o.traj);
  } catch (const InsufficientData& e) {
    o.fit_note = e.what();
  }

  json meta;
  meta["config"] = to_json(cfg);
  meta["status"] = std::string(to_string(o.traj.status));
  meta["partial"] = !o.traj.ok();
  if (!o.traj.ok()) {
    meta["failure"] = o.traj.failure;
    meta["failed_level"] = o.traj.failed_level;
  }
  meta["levels_written"] = o.traj.levels.size();
  meta["h"] = grid.h;
  meta["k"] = grid.k;
  meta["stability"] = stability_json(cfg, o.traj);
  if (o.fit) {
    meta["decay_fit"] = {{"alpha_hat", o.fit->alpha_hat},
                         {"r_squared", o.fit->r_squared},
                         {"t_start", o.fit->t_start},
                         {"t_end", o.fit->t_end},
                         {"samples", o.fit->samples},
                         {"window_fraction", stability::kDefaultDecayWindow}};
  } else {
    meta["decay_fit"] = {{"unavailable", o.fit_note}};
  }
  meta["notes"] = {"figure presets default to grid.N=100, grid.M=1000"};
  meta["created_utc"] = io::utc_timestamp();
  o.metadata = meta;

  if (cfg.wants("csv")) io::write_text(dir / "trajectory.csv", io::trajectory_csv(o.traj));
  if (cfg.wants("json")) io::write_json(dir / "metadata.json", meta);
  if (cfg.wants("dat")) io::write_panels(dir, o.traj);
  return o;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  const SimulateOutcome o = simulate(cfg, cfg.output_directory);
  const LevelRecord& last = o.traj.levels.back();
  out << "status " << to_string(o.traj.status) << ", levels " << o.traj.levels.size() - 1 << "/"
      << cfg.M << ", final l2 " << fmt_err(last.l2) << ", stability " << o.stability_verdict();
  if (o.fit) out << ", alpha_hat " << fmt_err(o.fit->alpha_hat);
  out << "\nartifacts in " << cfg.output_directory << "\n";
  if (!o.traj.ok()) {
    out << "run failed: " << o.traj.failure << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}

int cmd_converge_space(const RunConfig& cfg, const ConvergeOptions& opt, std::ostream& out) {
  const auto& table = baselines::spatial_state();
  const std::vector<int> ladder = opt.ladder.empty() ? table.ladder() : opt.ladder;
  const int fixed = opt.fixed.value_or(cfg.M);
  const std::vector<double> thetas = opt.thetas.empty() ? std::vector{cfg.params.theta} : opt.thetas;

  bool failed = false;
  std::optional<bool> pass;
  for (double theta : thetas) {
    const auto plan = make_plan(cfg, analysis::Mode::spatial, ladder, fixed, theta);
    const auto result = analysis::run_study(plan, opt.parallel);
    const fs::path dir = thetas.size() > 1 ? fs::path(cfg.output_directory) / theta_tag(theta)
                                           : fs::path(cfg.output_directory);
    const auto rows = result.state_rows(opt.metric);
    const auto other = opt.metric == analysis::Metric::final_level
                           ? analysis::Metric::max_over_levels
                           : analysis::Metric::final_level;
    io::write_text(dir / "state.csv", io::state_rows_csv(rows));
    io::write_text(dir / ("state_" + std::string(analysis::to_string(other)) + ".csv"),
                   io::state_rows_csv(result.state_rows(other)));
    io::write_text(dir / "controller.csv", io::controller_rows_csv(result.controller_rows()));
    io::write_json(dir / "study.json", study_manifest(cfg, result, "converge-space", opt.metric));
    out << "spatial study, theta=" << theta << ", M=" << fixed << "\n";
    print_state_rows(out, rows);
    failed = failed || any_failed(result);

    if (published_setup(cfg) && same(theta, 1.0) && fixed == 10000 &&
        opt.metric == analysis::Metric::final_level) {
      const auto cmp = baselines::compare(table, baselines::from_state_rows(rows));
      io::write_text(dir / "comparison.csv", io::comparison_csv(table.id, cmp));
      print_comparison(out, table.id, cmp);
      pass = pass.value_or(true) && cmp.pass();
    } else {
      out << "no published baseline for this setup; comparison skipped\n";
    }
  }
  return exit_for(failed, pass);
}

int cmd_converge_time(const RunConfig& cfg, const ConvergeOptions& opt, std::ostream& out) {
  const auto& table = baselines::temporal_state();
  const std::vector<int> ladder = opt.ladder.empty() ? table.ladder() : opt.ladder;
  const int fixed = opt.fixed.value_or(cfg.N);
  const std::vector<double> thetas = opt.thetas.empty() ? std::vector{cfg.params.theta} : opt.thetas;

  bool failed = false;
  std::optional<bool> pass;
  for (double theta : thetas) {
    const auto plan = make_plan(cfg, analysis::Mode::temporal, ladder, fixed, theta);
    const auto result = analysis::run_study(plan, opt.parallel);
    const fs::path dir = thetas.size() > 1 ? fs::path(cfg.output_directory) / theta_tag(theta)
                                           : fs::path(cfg.output_directory);
    const auto rows = result.state_rows(opt.metric);
    const auto other = opt.metric == analysis::Metric::final_level
                           ? analysis::Metric::max_over_levels
                           : analysis::Metric::final_level;
    io::write_text(dir / "state.csv", io::state_rows_csv(rows));
    io::write_text(dir / ("state_" + std::string(analysis::to_string(other)) + ".csv"),
                   io::state_rows_csv(result.state_rows(other)));
    io::write_text(dir / "controller.csv", io::controller_rows_csv(result.controller_rows()));
    io::write_json(dir / "study.json", study_manifest(cfg, result, "converge-time", opt.metric));
    out << "temporal study, theta=" << theta << ", N=" << fixed << "\n";
    print_state_rows(out, rows);
    failed = failed || any_failed(result);

    // Both published columns are max-norm errors of the final level; the
    // theta=1/2 values sit in column a and the theta=1 values in column b.
    const bool half = same(theta, 0.5);
    const bool one = same(theta, 1.0);
    if (published_setup(cfg) && (half || one) && fixed == 100 &&
        opt.metric == analysis::Metric::final_level) {
      std::vector<baselines::Computed> computed;
      for (const auto& r : rows)
        computed.push_back({r.resolution, r.err_inf, r.order_inf, r.err_inf, r.order_inf});
      const auto cmp = baselines::compare(table, computed, half, one);
      io::write_text(dir / "comparison.csv", io::comparison_csv(table.id, cmp));
      print_comparison(out, table.id, cmp);
      pass = pass.value_or(true) && cmp.pass();
    } else {
      out << "no published baseline for this setup; comparison skipped\n";
    }
  }
  return exit_for(failed, pass);
}

int cmd_converge_controller(const RunConfig& cfg, const ConvergeOptions& opt, std::ostream& out) {
  const auto& table = baselines::spatial_controller();
  const bool spatial = opt.controller_mode == analysis::Mode::spatial;
  std::vector<int> ladder = opt.ladder;
  if (ladder.empty()) {
    // Desk-scale default stops at 1280; pass --ladder for the full table.
    ladder = spatial ? std::vector<int>{40, 80, 160, 320, 640, 1280}
                     : baselines::temporal_state().ladder();
  }
  const int fixed = opt.fixed.value_or(spatial ? cfg.M : cfg.N);
  const std::vector<double> thetas = opt.thetas.empty() ? std::vector{cfg.params.theta} : opt.thetas;

  bool failed = false;
  std::optional<bool> pass;
  for (double theta : thetas) {
    const auto plan = make_plan(cfg, opt.controller_mode, ladder, fixed, theta);
    const auto result = analysis::run_study(plan, opt.parallel);
    const fs::path dir = thetas.size() > 1 ? fs::path(cfg.output_directory) / theta_tag(theta)
                                           : fs::path(cfg.output_directory);
    const auto rows = result.controller_rows();
    io::write_text(dir / "controller.csv", io::controller_rows_csv(rows));
    io::write_json(dir / "study.json",
                   study_manifest(cfg, result, "converge-controller", opt.metric));
    out << (spatial ? "spatial" : "temporal") << " controller study, theta=" << theta
        << (spatial ? ", M=" : ", N=") << fixed << "\n";
    print_controller_rows(out, rows);
    failed = failed || any_failed(result);

    if (spatial && published_setup(cfg) && same(theta, 1.0) && fixed == 10000) {
      const auto cmp = baselines::compare(table, baselines::from_controller_rows(rows));
      io::write_text(dir / "comparison.csv", io::comparison_csv(table.id, cmp));
      print_comparison(out, table.id, cmp);
      pass = pass.value_or(true) && cmp.pass();
    } else {
      out << "no published baseline for this setup; comparison skipped\n";
    }
  }
  return exit_for(failed, pass);
}

SweepAxis parse_sweep_axis(std::string_view text) {
  const auto [lhs, rhs] = split_assignment(text);
  SweepAxis axis;
  std::string keys = lhs;
  std::size_t start = 0;
  while (true) {
    const auto pos = keys.find(',', start);
    std::string k = keys.substr(start, pos == std::string::npos ? pos : pos - start);
    k.erase(0, k.find_first_not_of(' '));
    k.erase(k.find_last_not_of(' ') + 1);
    if (k.empty()) throw ConfigError("sweep: empty key in '" + std::string(text) + "'");
    if (k != "k" && std::find(config_keys().begin(), config_keys().end(), k) == config_keys().end())
      throw ConfigError("sweep: unknown config key '" + k + "'");
    axis.keys.push_back(k);
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  start = 0;
  while (true) {
    const auto pos = rhs.find(',', start);
    std::string v = rhs.substr(start, pos == std::string::npos ? pos : pos - start);
    v.erase(0, v.find_first_not_of(' '));
    v.erase(v.find_last_not_of(' ') + 1);
    if (v.empty()) throw ConfigError("sweep: empty value in '" + std::string(text) + "'");
    axis.values.push_back(v);
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return axis;
}

std::vector<std::vector<std::pair<std::string, std::string>>> sweep_points(
    const std::vector<SweepAxis>& axes) {
  std::vector<std::vector<std::pair<std::string, std::string>>> points{{}};
  for (const SweepAxis& axis : axes) {
    std::vector<std::vector<std::pair<std::string, std::string>>> next;
    for (const auto& p : points)
      for (const std::string& v : axis.values) {
        auto q = p;
        for (const std::string& k : axis.keys) q.emplace_back(k, v);
        next.push_back(std::move(q));
      }
    points = std::move(next);
  }
  return points;
}

namespace {

RunConfig apply_point(const RunConfig& base, const std::vector<std::pair<std::string, std::string>>& pt,
                      const fs::path& dir) {
  RunConfig c = base;
  std::optional<double> k;
  for (const auto& [key, value] : pt) {
    if (key == "k") {
      const auto v = parse_double_list("k", value);
      if (v.size() != 1 || !(v[0] > 0.0)) throw ConfigError("k: expected one positive number");
      k = v[0];
    } else {
      apply_setting(c, key, value);
    }
  }
  if (k) c.M = static_cast<int>(std::lround(c.T / *k));
  c.output_directory = dir.string();
  c.validate();
  return c;
}

}  // namespace

int cmd_sweep(const RunConfig& cfg, const std::vector<SweepAxis>& axes, std::ostream& out) {
  const auto points = sweep_points(axes);
  const fs::path root = cfg.output_directory;

  // Every point is validated before any run starts.
  std::vector<RunConfig> configs;
  for (std::size_t p = 0; p < points.size(); ++p) {
    char name[32];
    std::snprintf(name, sizeof name, "point_%03zu", p);
    configs.push_back(apply_point(cfg, points[p], root / name));
  }

  struct Summary {
    std::string status = "completed";
    double final_l2 = std::nan("");
    double alpha_hat = std::nan("");
    double r_squared = std::nan("");
    std::string stability;
    std::string failure;
  };
  std::vector<Summary> results(configs.size());
  const int count = static_cast<int>(configs.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (int p = 0; p < count; ++p) {
    Summary& s = results[static_cast<std::size_t>(p)];
    try {
      const SimulateOutcome o = simulate(configs[p], configs[p].output_directory);
      s.status = std::string(to_string(o.traj.status));
      s.final_l2 = o.traj.levels.back().l2;
      if (o.fit) {
        s.alpha_hat = o.fit->alpha_hat;
        s.r_squared = o.fit->r_squared;
      }
      s.stability = o.stability_verdict();
      s.failure = o.traj.failure;
    } catch (const std::exception& e) {
      s.status = "error";
      s.failure = e.what();
    }
  }

  std::ostringstream csv;
  csv << "point";
  std::vector<std::string> keys;
  for (const SweepAxis& a : axes)
    for (const std::string& k : a.keys) keys.push_back(k);
  for (const std::string& k : keys) csv << ',' << k;
  csv << ",status,final_l2,alpha_hat,r_squared,stability\n";
  json manifest;
  manifest["command"] = "sweep";
  manifest["config"] = to_json(cfg);
  manifest["points"] = json::array();
  bool any_failure = false;
  for (std::size_t p = 0; p < points.size(); ++p) {
    const Summary& s = results[p];
    csv << p;
    for (const auto& kv : points[p]) csv << ',' << kv.second;
    csv << ',' << s.status << ',' << io::format_number(s.final_l2) << ','
        << io::format_number(s.alpha_hat) << ',' << io::format_number(s.r_squared) << ','
        << s.stability << '\n';
    json jp = {{"point", p}, {"directory", configs[p].output_directory}, {"status", s.status}};
    for (const auto& kv : points[p]) jp["settings"][kv.first] = kv.second;
    if (!s.failure.empty()) jp["failure"] = s.failure;
    manifest["points"].push_back(jp);
    any_failure = any_failure || s.status != "completed";
    out << "point " << p << ": " << s.status << ", final l2 " << fmt_err(s.final_l2)
        << ", alpha_hat " << fmt_err(s.alpha_hat) << "\n";
  }
  manifest["created_utc"] = io::utc_timestamp();
  io::write_text(root / "summary.csv", csv.str());
  io::write_json(root / "sweep.json", manifest);
  return any_failure ? kExitNumerical : kExitOk;
}

std::vector<ProbeResult> stability_probe(const RunConfig& cfg, const ProbeOptions& opt) {
  if (cfg.params.theta >= 0.5)
    throw RegimeError("stability-probe applies only to theta < 1/2 (got theta=" +
                      std::to_string(cfg.params.theta) + ")");
  if (opt.multipliers.empty()) throw ConfigError("probe multipliers must not be empty");
  if (!(opt.norm_factor > 0.0)) throw ConfigError("probe norm factor must be positive");
  cfg.validate();

  const GridSpec base = cfg.grid();
  const StateField W0 = sample_initial(cfg.ic(), base, cfg.params);
  const double w_inf = opt.norm_factor * ops::max_abs(W0.view());
  const double k_min = stability::k_limits(cfg.params, base, w_inf).k_min();

  std::vector<ProbeResult> results(opt.multipliers.size());
  for (std::size_t j = 0; j < opt.multipliers.size(); ++j) {
    const double m = opt.multipliers[j];
    if (!(m > 0.0)) throw ConfigError("probe multipliers must be positive");
    ProbeResult& r = results[j];
    r.multiplier = m;
    r.k_min = k_min;
    // Largest k = T/M not above m * k_min.
    r.M = std::max(1, static_cast<int>(std::ceil(cfg.T / (m * k_min) - 1e-9)));
    const GridSpec grid = make_grid(cfg.N, r.M, cfg.T);
    r.k = grid.k;
    r.bound_satisfied = grid.k < k_min;
    RunOptions ro = cfg.run_options();
    ro.monitors = true;
    const RunTrajectory traj = run(W0, grid, cfg.params, ro);
    r.status = traj.status;
    r.failed_level = traj.failed_level;
    if (!traj.verdicts.empty()) r.last_verdict_satisfied = traj.verdicts.back().satisfied;
  }
  return results;
}

int cmd_stability_probe(const RunConfig& cfg, const ProbeOptions& opt, std::ostream& out) {
  const auto results = stability_probe(cfg, opt);
  std::ostringstream csv;
  csv << "multiplier,k,M,k_min,bound_satisfied,status,failed_level,last_verdict\n";
  json j;
  j["command"] = "stability-probe";
  j["config"] = to_json(cfg);
  j["norm_factor"] = opt.norm_factor;
  j["runs"] = json::array();
  for (const ProbeResult& r : results) {
    csv << io::format_number(r.multiplier) << ',' << io::format_number(r.k) << ',' << r.M << ','
        << io::format_number(r.k_min) << ',' << (r.bound_satisfied ? "true" : "false") << ','
        << to_string(r.status) << ',' << r.failed_level << ','
        << (r.last_verdict_satisfied ? (*r.last_verdict_satisfied ? "satisfied" : "violated") : "")
        << '\n';
    j["runs"].push_back({{"multiplier", r.multiplier},
                         {"k", r.k},
                         {"M", r.M},
                         {"k_min", num_or_null(r.k_min)},
                         {"bound_satisfied", r.bound_satisfied},
                         {"status", std::string(to_string(r.status))},
                         {"failed_level", r.failed_level},
                         {"last_verdict_satisfied", r.last_verdict_satisfied
                                                        ? json(*r.last_verdict_satisfied)
                                                        : json(nullptr)}});
    out << "multiplier " << r.multiplier << ": k=" << fmt_err(r.k) << " (k_min " << fmt_err(r.k_min)
        << ", bound " << (r.bound_satisfied ? "satisfied" : "violated") << ") -> "
        << to_string(r.status) << "\n";
  }
  j["created_utc"] = io::utc_timestamp();
  io::write_text(fs::path(cfg.output_directory) / "probe.csv", csv.str());
  io::write_json(fs::path(cfg.output_directory) / "probe.json", j);
  return kExitOk;
}

}  // namespace burgers::cli
