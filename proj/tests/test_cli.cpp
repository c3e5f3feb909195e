#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "burgers/commands.hpp"
#include "burgers/config.hpp"
#include "burgers/errors.hpp"
#include "burgers/output.hpp"

using namespace burgers;
using namespace burgers::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("burgers_cli_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string first_line(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  return line;
}

int run_cli(const std::string& args) {
  const char* exe = std::getenv("BURGERS_CLI");
  REQUIRE_MESSAGE(exe != nullptr, "BURGERS_CLI is not set");
  const std::string cmd = std::string(exe) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

RunConfig small(const std::string& preset_id, const fs::path& dir) {
  RunConfig c = preset(preset_id);
  c.N = 20;
  c.M = 50;
  c.output_directory = dir.string();
  return c;
}

}  // namespace

TEST_CASE("presets expand to the documented values") {
  const RunConfig a = preset("example51");
  CHECK(a.params.nu == 1.0);
  CHECK(a.params.wd == 5.0);
  CHECK(a.params.theta == 1.0);
  CHECK(a.ic_kind == InitialCondition::Kind::quadratic5);
  CHECK(a.N == 100);
  CHECK(a.M == 1000);
  const RunConfig b = preset("example52");
  CHECK(b.params.nu == 0.1);
  CHECK(b.params.wd == 3.0);
  CHECK(b.params.theta == 0.5);
  CHECK(b.ic_kind == InitialCondition::Kind::cosine2);
  CHECK_THROWS_AS(preset("example99"), ConfigError);
}

TEST_CASE("bad values name their key") {
  RunConfig c = preset("example51");
  apply_setting(c, "params.theta", "1.5");
  try {
    c.validate();
    FAIL("expected a config error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("theta") != std::string::npos);
  }
  try {
    apply_setting(c, "grid.Q", "3");
    FAIL("expected a config error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("grid.Q") != std::string::npos);
  }
  CHECK_THROWS_AS(apply_setting(c, "grid.N", "ten"), ConfigError);
  CHECK_THROWS_AS(split_assignment("grid.N"), ConfigError);
}

TEST_CASE("file then overrides") {
  const fs::path dir = scratch("layering");
  const fs::path file = dir / "cfg.json";
  std::ofstream(file) << R"({"preset.id": "example51", "grid.N": 30, "params.theta": 0.75,
                              "toggles.controlled": false, "output.formats": ["csv"]})";
  const RunConfig c = load_config(std::nullopt, file.string(), {"grid.N=40", "params.c0=2"});
  CHECK(c.preset == "example51");
  CHECK(c.params.wd == 5.0);
  CHECK(c.N == 40);
  CHECK(c.params.theta == 0.75);
  CHECK(c.params.c0 == 2.0);
  CHECK_FALSE(c.controlled);
  CHECK(c.wants("csv"));
  CHECK_FALSE(c.wants("json"));

  const RunConfig d = load_config(std::string("example52"), file.string(), {});
  CHECK(d.preset == "example52");
  CHECK(d.params.nu == 0.1);
  CHECK(d.N == 30);
}

TEST_CASE("config echo round-trips") {
  RunConfig c = preset("example52");
  apply_setting(c, "newton.tol", "1e-10");
  apply_setting(c, "ic.kind", "tabulated");
  apply_setting(c, "ic.values", "0.5,1,2");
  apply_setting(c, "grid.N", "2");
  const nlohmann::json j = to_json(c);
  for (const std::string& key : config_keys()) CHECK_MESSAGE(j.contains(key), key);
  RunConfig back;
  apply_json(back, j);
  CHECK(to_json(back) == j);
}

TEST_CASE("simulate writes reproducible files with fixed headers") {
  const fs::path a = scratch("sim_a"), b = scratch("sim_b");
  std::ostringstream sink;
  CHECK(cmd_simulate(small("example51", a), sink) == kExitOk);
  CHECK(cmd_simulate(small("example51", b), sink) == kExitOk);
  CHECK(first_line(a / "trajectory.csv") == "n,t,l2,h1_semi,linf,W0,WN,g0,gN,newton_iters");
  CHECK(slurp(a / "trajectory.csv") == slurp(b / "trajectory.csv"));
  CHECK(fs::exists(a / "l2_norm.dat"));
  CHECK(fs::exists(a / "controller_x0.dat"));
  CHECK(fs::exists(a / "controller_x1.dat"));

  const auto meta = nlohmann::json::parse(slurp(a / "metadata.json"));
  CHECK(meta.at("config") == to_json(small("example51", a)));
  CHECK(meta.at("status") == "completed");
  CHECK(meta.contains("created_utc"));
}

TEST_CASE("partial trajectories are written on blow-up") {
  const fs::path dir = scratch("sim_blow");
  RunConfig c = small("example52", dir);
  c.params.theta = 0.0;
  c.T = 20.0;
  c.M = 40;
  std::ostringstream sink;
  CHECK(cmd_simulate(c, sink) == kExitNumerical);
  const auto meta = nlohmann::json::parse(slurp(dir / "metadata.json"));
  CHECK(meta.at("partial") == true);
  CHECK(meta.at("status") == "blow_up");
}

TEST_CASE("converge tables have fixed headers") {
  const fs::path dir = scratch("conv");
  RunConfig c = preset("example51");
  c.output_directory = dir.string();
  ConvergeOptions o;
  o.ladder = {10, 20, 40};
  o.fixed = 100;
  std::ostringstream sink;
  const int code = cmd_converge_space(c, o, sink);
  CHECK((code == kExitOk || code == kExitComparison));
  CHECK(first_line(dir / "state.csv") == "resolution,err_inf,order_inf,err_l2,order_l2");
  CHECK(first_line(dir / "controller.csv") == "resolution,err_x0,order_x0,err_x1,order_x1");
  CHECK(fs::exists(dir / "study.json"));
}

TEST_CASE("sweep axes") {
  const SweepAxis one = parse_sweep_axis("params.theta=0.5,1");
  CHECK(one.keys == std::vector<std::string>{"params.theta"});
  CHECK(one.values.size() == 2u);
  const SweepAxis tied = parse_sweep_axis("params.c0,params.c1=1,2,3");
  CHECK(tied.keys.size() == 2u);
  CHECK(tied.values.size() == 3u);
  CHECK_THROWS_AS(parse_sweep_axis("params.theta"), ConfigError);

  CHECK(sweep_points({}).size() == 1u);
  const auto pts = sweep_points({one, tied});
  REQUIRE(pts.size() == 6u);
  CHECK(pts[0].size() == 3u);

  const fs::path dir = scratch("sweep");
  RunConfig c = small("example51", dir);
  std::ostringstream sink;
  CHECK(cmd_sweep(c, {parse_sweep_axis("k=0.05,0.025")}, sink) == kExitOk);
  CHECK(fs::exists(dir / "point_000" / "trajectory.csv"));
  CHECK(fs::exists(dir / "point_001" / "trajectory.csv"));
  CHECK(fs::exists(dir / "summary.csv"));
  const auto meta = nlohmann::json::parse(slurp(dir / "point_001" / "metadata.json"));
  CHECK(meta.at("config").at("grid.M") == 40);
}

TEST_CASE("probe refuses the unconditional regime") {
  RunConfig c = preset("example52");
  CHECK_THROWS_AS(stability_probe(c, ProbeOptions{}), RegimeError);
}

TEST_CASE("exit codes of the executable") {
  const fs::path dir = scratch("exe");
  const std::string out = " -o " + dir.string();
  CHECK(run_cli("simulate --preset example51 --set grid.N=10 grid.M=20" + out) == 0);
  CHECK(fs::exists(dir / "trajectory.csv"));
  CHECK(run_cli("simulate --preset example51 --set params.theta=1.5" + out) == 2);
  CHECK(run_cli("simulate --set no.such.key=1" + out) == 2);
  CHECK(run_cli("simulate --preset example52 --set params.theta=0 grid.T=20 grid.M=40 grid.N=20" +
                out) == 3);
  CHECK(run_cli("stability-probe --preset example52" + out) == 2);
  CHECK(run_cli("frobnicate") != 0);
}
