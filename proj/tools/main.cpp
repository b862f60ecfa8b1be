#include <iostream>

#include <CLI11.hpp>

#include "rydanneal/commands.hpp"
#include "rydanneal/errors.hpp"

using namespace rydanneal;
using namespace rydanneal::cli;

namespace {

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_out = true) {
  cmd->add_option("--seed", opts.seed, "master seed (u64)");
  cmd->add_option("--threads", opts.threads, "worker threads, 0 = all cores")->check(CLI::NonNegativeNumber);
  if (with_out) cmd->add_option("--out", opts.out, "output directory or file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rydberg-atom quantum annealing simulator for MIS/MWIS on unit-disk graphs"};
  app.require_subcommand(1);
  CommonOptions opts;

  std::string config;
  bool wall_time = false;
  auto* run = app.add_subcommand("run", "simulate one configuration and write a result file");
  run->add_option("--config", config, "run config (JSON)")->required();
  run->add_flag("--wall-time", wall_time, "record wall_time_s in the result");
  add_common(run, opts);

  std::string reagg;
  auto* sweep = app.add_subcommand("sweep", "run a parameter grid and aggregate it");
  sweep->add_option("--config", config, "sweep spec (JSON)");
  sweep->add_option("--reaggregate", reagg, "rebuild aggregate.csv of an existing sweep directory");
  add_common(sweep, opts);

  bool as_json = false;
  auto* oracle = app.add_subcommand("oracle", "exact MWIS of a graph file or run config");
  oracle->add_option("--config,graph", config, "graph file or run config")->required();
  oracle->add_flag("--json", as_json, "emit JSON");

  std::string result;
  auto* verify = app.add_subcommand("verify", "check a result file against the oracle");
  verify->add_option("result,--config", result, "result file")->required();

  auto* graph = app.add_subcommand("graph", "graph utilities");
  graph->require_subcommand(1);
  std::string name;
  double lambda = 7.0;
  auto* gexport = graph->add_subcommand("export", "write library graphs as graph definition files");
  gexport->add_option("--name", name, "library graph (default: all)");
  gexport->add_option("--lambda", lambda, "spacing constant in um");
  gexport->add_option("--out", opts.out, "output directory or .json file");

  auto* analyze = app.add_subcommand("analyze", "CSV post-processing");
  analyze->require_subcommand(1);
  std::string input;
  auto* ranked = analyze->add_subcommand("ranked", "configurations by probability with oracle classes");
  ranked->add_option("result", input)->required();
  auto* sus = analyze->add_subcommand("susceptibility", "chi = d<n>/d(axis) of a one-axis sweep");
  sus->add_option("sweep_dir", input)->required();
  auto* grid = analyze->add_subcommand("phase-grid", "phase label per point of a two-axis sweep");
  grid->add_option("sweep_dir", input)->required();
  auto* walls = analyze->add_subcommand("walls", "domain walls per configuration of a chain result");
  walls->add_option("result", input)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  try {
    if (*run) return command_run(config, opts, wall_time, std::cout);
    if (*sweep) {
      if (!reagg.empty()) return command_reaggregate(reagg, std::cout);
      if (config.empty()) throw ConfigError("--config", "sweep needs --config or --reaggregate");
      return command_sweep(config, opts, std::cout);
    }
    if (*oracle) return command_oracle(config, std::cout, as_json);
    if (*verify) return command_verify(result, std::cout);
    if (*gexport) return command_graph_export(name, lambda, opts.out, std::cout);
    if (*ranked) return command_analyze_ranked(input, std::cout);
    if (*sus) return command_analyze_susceptibility(input, std::cout);
    if (*grid) return command_analyze_phase_grid(input, std::cout);
    if (*walls) return command_analyze_walls(input, std::cout);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const SpacingError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const EngineError& e) {
    std::cerr << "engine failure: " << e.what() << "\n";
    return kEngineFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kEngineFailure;
  }
  return kOk;
}
