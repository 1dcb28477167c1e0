#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "gneseek/config.hpp"
#include "gneseek/errors.hpp"
#include "gneseek/game.hpp"
#include "gneseek/graph.hpp"
#include "gneseek/runner.hpp"
#include "gneseek/schedule.hpp"

namespace {

gneseek::GraphTopology build_graph(const gneseek::RunConfig& config) {
  if (config.graph_kind == "ring") return gneseek::build_ring(config.n_players);
  if (config.graph_kind == "path") return gneseek::build_path(config.n_players);
  if (config.graph_kind == "complete") return gneseek::build_complete(config.n_players);
  return gneseek::build_metropolis(config.n_players, config.edges);
}

int validate_only(const std::string& path) {
  const gneseek::RunConfig cfg = gneseek::parse_config(path);
  const gneseek::GraphTopology graph = build_graph(cfg);
  gneseek::StepSchedule::horizon_tuned(cfg.a1, cfg.a2, cfg.horizon).validate();
  const gneseek::TimeVaryingGame game =
      cfg.game_kind == "cournot"
          ? gneseek::cournot_game(cfg.n_players, cfg.game_horizon)
          : gneseek::simplex_test_game(cfg.n_players, cfg.game_horizon);
  std::cout << "config ok: game=" << game.kind << " n=" << cfg.n_players
            << " T=" << cfg.horizon << " graph=" << cfg.graph_kind
            << " sigma=" << graph.sigma << " sigma_m=" << graph.sigma_m
            << " L=" << game.constants.L << " mu=" << game.constants.mu << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decentralized online equilibrium seeking experiments"};
  app.require_subcommand(1);

  std::string run_config_path;
  gneseek::ExperimentOptions options;
  CLI::App* run_cmd = app.add_subcommand("run", "Execute an experiment from a config file");
  run_cmd->add_option("config", run_config_path, "Path to the config file")->required();
  run_cmd->add_option("--out", options.out_dir, "Output directory (default: out)");
  run_cmd->add_option("--gne-tol", options.gne_tol,
                      "Equilibrium solver tolerance (default: 1e-8)");
  run_cmd->add_flag("--hard-diagnostics", options.hard_diagnostics,
                    "Abort with exit code 5 when a runtime bound check fails");

  std::string validate_config_path;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "Parse and validate a config file, then exit");
  validate_cmd->add_option("config", validate_config_path, "Path to the config file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (run_cmd->parsed()) {
      const gneseek::RunConfig cfg = gneseek::parse_config(run_config_path);
      return gneseek::run_experiment(cfg, options);
    }
    return validate_only(validate_config_path);
  } catch (const gneseek::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
}
