#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "burgers/commands.hpp"
#include "burgers/config.hpp"
#include "burgers/errors.hpp"

namespace {

struct CommonArgs {
  std::string preset;
  std::string config;
  std::vector<std::string> sets;
  std::string out;
};

void add_common(CLI::App* sub, CommonArgs& a) {
  sub->add_option("--preset", a.preset, "example51 or example52");
  sub->add_option("--config", a.config, "flat JSON config file with dotted keys");
  sub->add_option("--set", a.sets, "key=value override, repeatable")->take_all();
  sub->add_option("-o,--out", a.out, "output directory (same as --set output.directory=...)");
}

burgers::cli::RunConfig load(const CommonArgs& a) {
  std::vector<std::string> sets = a.sets;
  if (!a.out.empty()) sets.push_back("output.directory=" + a.out);
  return burgers::cli::load_config(a.preset.empty() ? std::nullopt : std::optional(a.preset),
                                   a.config.empty() ? std::nullopt : std::optional(a.config),
                                   sets);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace burgers::cli;
  CLI::App app{"theta-scheme solver for boundary-controlled viscous Burgers"};
  app.require_subcommand(1);

  CommonArgs common;
  std::string ladder, thetas, metric = "final_level", mode = "space", multipliers = "0.5,10";
  int fixed = 0;
  double norm_factor = 1.0;
  std::vector<std::string> vary;

  auto* sim = app.add_subcommand("simulate", "run one trajectory");
  add_common(sim, common);

  auto add_converge = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    add_common(s, common);
    s->add_option("--ladder", ladder, "comma separated doubling ladder");
    s->add_option("--fixed", fixed, "held resolution (M for space, N for time)");
    s->add_option("--theta", thetas, "comma separated theta values");
    s->add_option("--metric", metric, "final_level or max_over_levels");
    return s;
  };
  auto* cspace = add_converge("converge-space", "spatial self-convergence study");
  auto* ctime = add_converge("converge-time", "temporal self-convergence study");
  auto* cctrl = add_converge("converge-controller", "controller self-convergence study");
  cctrl->add_option("--mode", mode, "space or time");

  auto* sweep = app.add_subcommand("sweep", "cartesian parameter sweep");
  add_common(sweep, common);
  sweep->add_option("--vary", vary, "key=v1,v2 or key1,key2=v1,v2 (tied), repeatable")->take_all();

  auto* probe = app.add_subcommand("stability-probe", "runs at multiples of the step limit");
  add_common(probe, common);
  probe->add_option("--multipliers", multipliers, "comma separated multipliers of min k_i");
  probe->add_option("--norm-factor", norm_factor, "w_inf = factor * ||W^0||_inf");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    const RunConfig cfg = load(common);
    if (sim->parsed()) return cmd_simulate(cfg, std::cout);

    if (cspace->parsed() || ctime->parsed() || cctrl->parsed()) {
      ConvergeOptions opt;
      opt.ladder = parse_int_list("--ladder", ladder);
      if (fixed > 0) opt.fixed = fixed;
      opt.thetas = parse_double_list("--theta", thetas);
      opt.metric = burgers::analysis::parse_metric(metric);
      opt.controller_mode = burgers::analysis::parse_mode(mode);
      if (cspace->parsed()) return cmd_converge_space(cfg, opt, std::cout);
      if (ctime->parsed()) return cmd_converge_time(cfg, opt, std::cout);
      return cmd_converge_controller(cfg, opt, std::cout);
    }

    if (sweep->parsed()) {
      std::vector<SweepAxis> axes;
      for (const std::string& v : vary) axes.push_back(parse_sweep_axis(v));
      return cmd_sweep(cfg, axes, std::cout);
    }

    ProbeOptions opt;
    opt.multipliers = parse_double_list("--multipliers", multipliers);
    opt.norm_factor = norm_factor;
    return cmd_stability_probe(cfg, opt, std::cout);
  } catch (const burgers::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const burgers::RegimeError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const burgers::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
