#include "burgers/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <string>

#include "burgers/errors.hpp"

namespace burgers::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(trim(text.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(std::string_view key, std::string_view text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v))
    throw ConfigError(std::string(key) + ": expected a number, got '" + t + "'");
  return v;
}

int parse_int(std::string_view key, std::string_view text) {
  const std::string t = trim(text);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || v < -2147483647LL ||
      v > 2147483647LL)
    throw ConfigError(std::string(key) + ": expected an integer, got '" + t + "'");
  return static_cast<int>(v);
}

bool parse_bool(std::string_view key, std::string_view text) {
  const std::string t = trim(text);
  if (t == "true" || t == "on" || t == "1" || t == "yes") return true;
  if (t == "false" || t == "off" || t == "0" || t == "no") return false;
  throw ConfigError(std::string(key) + ": expected on/off, got '" + t + "'");
}

}  // namespace

std::vector<double> parse_double_list(std::string_view key, std::string_view text) {
  std::vector<double> out;
  if (trim(text).empty()) return out;
  for (const std::string& item : split(text, ',')) out.push_back(parse_double(key, item));
  return out;
}

std::vector<int> parse_int_list(std::string_view key, std::string_view text) {
  std::vector<int> out;
  if (trim(text).empty()) return out;
  for (const std::string& item : split(text, ',')) out.push_back(parse_int(key, item));
  return out;
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{
      "preset.id",        "grid.N",           "grid.M",
      "grid.T",           "params.nu",        "params.wd",
      "params.c0",        "params.c1",        "params.theta",
      "ic.kind",          "ic.values",        "ic.subtract_wd",
      "toggles.controlled", "toggles.store_history", "toggles.monitors",
      "newton.tol",       "newton.max_iter",  "exec.backend",
      "exec.blowup_threshold", "output.directory", "output.formats"};
  return keys;
}

const std::vector<std::string>& preset_ids() {
  static const std::vector<std::string> ids{"example51", "example52"};
  return ids;
}

RunConfig preset(std::string_view id) {
  RunConfig c;
  c.preset = std::string(id);
  // Figure runs use N=100, M=1000 unless overridden.
  c.N = 100;
  c.M = 1000;
  c.T = 1.0;
  c.params.c0 = 1.0;
  c.params.c1 = 1.0;
  if (id == "example51") {
    c.params.nu = 1.0;
    c.params.wd = 5.0;
    c.params.theta = 1.0;
    c.ic_kind = InitialCondition::Kind::quadratic5;
  } else if (id == "example52") {
    c.params.nu = 0.1;
    c.params.wd = 3.0;
    c.params.theta = 0.5;
    c.ic_kind = InitialCondition::Kind::cosine2;
  } else if (id == "none") {
  } else {
    throw ConfigError("preset.id: unknown preset '" + std::string(id) +
                      "' (expected example51 or example52)");
  }
  return c;
}

void apply_setting(RunConfig& c, std::string_view key, std::string_view value) {
  const std::string k = trim(key);
  if (k == "preset.id") {
    const RunConfig p = preset(trim(value));
    c = p;
  } else if (k == "grid.N") c.N = parse_int(k, value);
  else if (k == "grid.M") c.M = parse_int(k, value);
  else if (k == "grid.T") c.T = parse_double(k, value);
  else if (k == "params.nu") c.params.nu = parse_double(k, value);
  else if (k == "params.wd") c.params.wd = parse_double(k, value);
  else if (k == "params.c0") c.params.c0 = parse_double(k, value);
  else if (k == "params.c1") c.params.c1 = parse_double(k, value);
  else if (k == "params.theta") c.params.theta = parse_double(k, value);
  else if (k == "ic.kind") c.ic_kind = parse_ic_kind(trim(value));
  else if (k == "ic.values") c.ic_values = parse_double_list(k, value);
  else if (k == "ic.subtract_wd") c.ic_subtract_wd = parse_bool(k, value);
  else if (k == "toggles.controlled") c.controlled = parse_bool(k, value);
  else if (k == "toggles.store_history") c.store_history = parse_bool(k, value);
  else if (k == "toggles.monitors") c.monitors = parse_bool(k, value);
  else if (k == "newton.tol") c.newton.tol = parse_double(k, value);
  else if (k == "newton.max_iter") c.newton.max_iter = parse_int(k, value);
  else if (k == "exec.backend") {
    const std::string v = trim(value);
    if (v == "serial") c.backend = Backend::serial;
    else if (v == "parallel") c.backend = Backend::parallel;
    else throw ConfigError("exec.backend: expected serial or parallel, got '" + v + "'");
  } else if (k == "exec.blowup_threshold") c.blowup_threshold = parse_double(k, value);
  else if (k == "output.directory") c.output_directory = trim(value);
  else if (k == "output.formats") {
    c.output_formats.clear();
    if (!trim(value).empty())
      for (const std::string& f : split(value, ',')) c.output_formats.push_back(f);
  } else {
    throw ConfigError("unknown config key '" + k + "'");
  }
}

void apply_json(RunConfig& cfg, const nlohmann::json& obj) {
  if (!obj.is_object()) throw ConfigError("config file must hold a flat JSON object");
  // preset.id resets everything else, so it is applied first.
  if (obj.contains("preset.id")) {
    if (!obj["preset.id"].is_string()) throw ConfigError("preset.id: expected a string");
    apply_setting(cfg, "preset.id", obj["preset.id"].get<std::string>());
  }
  for (const auto& [key, value] : obj.items()) {
    if (key == "preset.id") continue;
    std::string text;
    if (value.is_string()) {
      text = value.get<std::string>();
    } else if (value.is_boolean()) {
      text = value.get<bool>() ? "true" : "false";
    } else if (value.is_number()) {
      text = value.dump();
    } else if (value.is_array()) {
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (i) text += ",";
        text += value[i].is_string() ? value[i].get<std::string>() : value[i].dump();
      }
    } else {
      throw ConfigError(key + ": unsupported value type");
    }
    apply_setting(cfg, key, text);
  }
}

std::pair<std::string, std::string> split_assignment(std::string_view text) {
  const auto pos = text.find('=');
  if (pos == std::string_view::npos || pos == 0)
    throw ConfigError("override '" + std::string(text) + "' must have the form key=value");
  return {trim(text.substr(0, pos)), std::string(text.substr(pos + 1))};
}

RunConfig load_config(const std::optional<std::string>& preset_id,
                      const std::optional<std::string>& path,
                      const std::vector<std::string>& overrides) {
  RunConfig cfg = preset(preset_id.value_or("none"));
  if (path) {
    std::ifstream in(*path);
    if (!in) throw ConfigError("config file '" + *path + "' cannot be opened");
    nlohmann::json obj;
    try {
      in >> obj;
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("config file '" + *path + "': " + e.what());
    }
    // A preset given on the command line wins over one named in the file.
    if (preset_id) obj.erase("preset.id");
    apply_json(cfg, obj);
  }
  for (const std::string& o : overrides) {
    const auto [k, v] = split_assignment(o);
    apply_setting(cfg, k, v);
  }
  cfg.validate();
  return cfg;
}

void RunConfig::validate() const {
  if (N < 2) throw ConfigError("grid.N must be >= 2");
  if (M < 1) throw ConfigError("grid.M must be >= 1");
  if (!(T > 0.0)) throw ConfigError("grid.T must be positive");
  params.validate();
  if (ic_kind == InitialCondition::Kind::tabulated &&
      ic_values.size() != static_cast<std::size_t>(N + 1))
    throw ConfigError("ic.values must hold grid.N + 1 = " + std::to_string(N + 1) +
                      " values, got " + std::to_string(ic_values.size()));
  if (!(newton.tol > 0.0)) throw ConfigError("newton.tol must be positive");
  if (newton.max_iter < 1) throw ConfigError("newton.max_iter must be >= 1");
  if (!(blowup_threshold > 0.0)) throw ConfigError("exec.blowup_threshold must be positive");
  if (output_directory.empty()) throw ConfigError("output.directory must not be empty");
  for (const std::string& f : output_formats)
    if (f != "csv" && f != "json" && f != "dat")
      throw ConfigError("output.formats: unknown format '" + f + "' (csv, json, dat)");
}

GridSpec RunConfig::grid() const { return make_grid(N, M, T); }

InitialCondition RunConfig::ic() const {
  switch (ic_kind) {
    case InitialCondition::Kind::quadratic5: return InitialCondition::quadratic5();
    case InitialCondition::Kind::cosine2: return InitialCondition::cosine2();
    case InitialCondition::Kind::tabulated: return InitialCondition::tabulated(ic_values, ic_subtract_wd);
  }
  return {};
}

BoundaryLaw RunConfig::boundary() const {
  return controlled ? BoundaryLaw::feedback() : BoundaryLaw::uncontrolled();
}

StepOptions RunConfig::step_options() const {
  StepOptions s;
  s.newton = newton;
  s.boundary = boundary();
  s.backend = backend;
  s.blowup_threshold = blowup_threshold;
  return s;
}

RunOptions RunConfig::run_options() const {
  RunOptions r;
  r.step = step_options();
  r.store_history = store_history;
  r.monitors = monitors;
  return r;
}

bool RunConfig::wants(std::string_view format) const {
  return std::find(output_formats.begin(), output_formats.end(), format) != output_formats.end();
}

nlohmann::json to_json(const RunConfig& c) {
  nlohmann::json j = nlohmann::json::object();
  j["preset.id"] = c.preset;
  j["grid.N"] = c.N;
  j["grid.M"] = c.M;
  j["grid.T"] = c.T;
  j["params.nu"] = c.params.nu;
  j["params.wd"] = c.params.wd;
  j["params.c0"] = c.params.c0;
  j["params.c1"] = c.params.c1;
  j["params.theta"] = c.params.theta;
  j["ic.kind"] = std::string(to_string(c.ic_kind));
  j["ic.values"] = c.ic_values;
  j["ic.subtract_wd"] = c.ic_subtract_wd;
  j["toggles.controlled"] = c.controlled;
  j["toggles.store_history"] = c.store_history;
  j["toggles.monitors"] = c.monitors;
  j["newton.tol"] = c.newton.tol;
  j["newton.max_iter"] = c.newton.max_iter;
  j["exec.backend"] = c.backend == Backend::serial ? "serial" : "parallel";
  j["exec.blowup_threshold"] = c.blowup_threshold;
  j["output.directory"] = c.output_directory;
  j["output.formats"] = c.output_formats;
  return j;
}

}  // namespace burgers::cli
