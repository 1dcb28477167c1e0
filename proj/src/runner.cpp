#include "gneseek/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "gneseek/engine.hpp"
#include "gneseek/equilibrium.hpp"
#include "gneseek/errors.hpp"
#include "gneseek/game.hpp"
#include "gneseek/geometry.hpp"
#include "gneseek/graph.hpp"
#include "gneseek/metrics.hpp"
#include "gneseek/schedule.hpp"

namespace gneseek {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

GraphTopology build_graph(const RunConfig& config) {
  if (config.graph_kind == "ring") return build_ring(config.n_players);
  if (config.graph_kind == "path") return build_path(config.n_players);
  if (config.graph_kind == "complete") return build_complete(config.n_players);
  return build_metropolis(config.n_players, config.edges);
}

}  // namespace

int run_experiment(const RunConfig& config, const ExperimentOptions& options) {
  const int n = config.n_players;
  const int T = config.horizon;

  TimeVaryingGame game = config.game_kind == "cournot"
                             ? cournot_game(n, config.game_horizon)
                             : simplex_test_game(n, config.game_horizon);
  const GraphTopology graph = build_graph(config);
  const BregmanGeometry geom = config.geometry_kind == "euclidean"
                                   ? BregmanGeometry::euclidean(game.action_dims[0])
                                   : BregmanGeometry::negative_entropy(game.action_dims[0]);
  StepSchedule schedule = StepSchedule::horizon_tuned(config.a1, config.a2, T);
  schedule.validate();

  const bool diagnostics = config.diagnostics || options.hard_diagnostics;
  GameConstants diag_constants = estimate_constants(game);
  if (config.l_override > 0.0) diag_constants.L = config.l_override;

  // Equilibrium path, warm-started round to round.
  std::vector<GneSolution> gne_path;
  gne_path.reserve(T);
  double max_kkt = 0.0;
  for (int t = 1; t <= T; ++t) {
    const GneSolution* warm = gne_path.empty() ? nullptr : &gne_path.back();
    gne_path.push_back(solve_vgne(game, t, options.gne_tol, 2000000, warm));
    max_kkt = std::max(max_kkt, gne_path.back().kkt_residual);
  }
  std::vector<Eigen::VectorXd> gne_actions;
  gne_actions.reserve(T);
  for (const auto& sol : gne_path) gne_actions.push_back(sol.actions);

  std::filesystem::create_directories(options.out_dir);
  std::ofstream csv(std::filesystem::path(options.out_dir) / "trace.csv",
                    std::ios::binary);
  if (!csv) {
    throw ValidationError("cannot write into output directory '" + options.out_dir + "'");
  }
  csv << "t,alpha_t,beta_t,gamma_t";
  for (int i = 1; i <= n; ++i) {
    if (game.action_dims[i - 1] == 1) {
      csv << ",x_" << i;
    } else {
      for (int k = 1; k <= game.action_dims[i - 1]; ++k) csv << ",x_" << i << "_" << k;
    }
    csv << ",lambda_" << i << "_norm";
  }
  csv << ",regret_max,violation,path_length,gne_kkt_residual,"
         "est_err_margin_min,dual_bound_margin_min\n";

  std::unique_ptr<DiagnosticsTracker> tracker;
  if (diagnostics) {
    tracker = std::make_unique<DiagnosticsTracker>(
        DiagnosticConstants::from(diag_constants, graph), schedule,
        options.hard_diagnostics);
  }

  std::vector<double> regret_acc(n, 0.0);
  Eigen::VectorXd violation_acc = Eigen::VectorXd::Zero(game.constraint_dim);
  double path_acc = 0.0;
  std::vector<double> regret_max_series;
  regret_max_series.reserve(T);
  double lambda_norm_peak = 0.0;
  double closed_form_gap = 0.0;
  const double nan = std::numeric_limits<double>::quiet_NaN();

  RunOptions run_options;
  run_options.mode = ExecutionMode::Parallel;
  run_options.seed = config.seed;
  run_options.sink = [&](const RoundObservables& obs) {
    const int t = obs.t;
    const Eigen::VectorXd& x_star = gne_actions[t - 1];
    for (int i = 0; i < n; ++i) {
      Eigen::VectorXd mixed = x_star;
      mixed.segment(game.offsets[i], game.action_dims[i]) = game.segment(obs.actions, i);
      regret_acc[i] += game.cost(i, t, mixed) - game.cost(i, t, x_star);
    }
    const double regret_max = *std::max_element(regret_acc.begin(), regret_acc.end());
    regret_max_series.push_back(regret_max);
    violation_acc += game.aggregate_constraint(t, obs.actions);
    const double violation = violation_acc.cwiseMax(0.0).norm();
    if (t >= 2) path_acc += (gne_actions[t - 1] - gne_actions[t - 2]).norm();
    for (int i = 0; i < n; ++i) {
      lambda_norm_peak = std::max(lambda_norm_peak, obs.lambda_norm[i]);
    }
    if (game.kind == "cournot") {
      for (int i = 0; i < n; ++i) {
        closed_form_gap = std::max(closed_form_gap,
                                   std::abs(cournot_closed_form(i + 1, t) - x_star[i]));
      }
    }
    double est_margin = nan, dual_margin = nan;
    if (tracker) {
      tracker->observe(obs);
      est_margin = tracker->round_est_margin();
      dual_margin = tracker->round_dual_margin();
    }

    csv << t << ',' << fmt(obs.alpha) << ',' << fmt(obs.beta) << ',' << fmt(obs.gamma);
    for (int i = 0; i < n; ++i) {
      const Eigen::VectorXd xi = game.segment(obs.actions, i);
      for (int k = 0; k < xi.size(); ++k) csv << ',' << fmt(xi[k]);
      csv << ',' << fmt(obs.lambda_norm[i]);
    }
    csv << ',' << fmt(regret_max) << ',' << fmt(violation) << ',' << fmt(path_acc)
        << ',' << fmt(gne_path[t - 1].kkt_residual) << ',' << fmt(est_margin) << ','
        << fmt(dual_margin) << '\n';
  };

  run(game, graph, geom, schedule, run_options);
  csv.close();

  const double final_regret_max = regret_max_series.back();
  const double final_violation = violation_acc.cwiseMax(0.0).norm();

  std::ofstream summary(std::filesystem::path(options.out_dir) / "summary.txt");
  summary << "game = " << game.kind << "\n"
          << "players = " << n << "\n"
          << "horizon = " << T << "\n"
          << "seed = " << config.seed << "\n"
          << "graph = " << config.graph_kind << " (sigma = " << fmt(graph.sigma)
          << ", sigma_m = " << fmt(graph.sigma_m) << ")\n"
          << "final_regret_max = " << fmt(final_regret_max) << "\n"
          << "final_violation = " << fmt(final_violation) << "\n"
          << "gne_path_length = " << fmt(path_acc) << "\n"
          << "gne_kkt_residual_max = " << fmt(max_kkt) << "\n"
          << "multiplier_norm_peak = " << fmt(lambda_norm_peak) << "\n";
  if (T < 4) {
    summary << "regret_fit_exponent = unavailable (horizon < 4)\n";
  } else {
    const FitResult fit = fit_exponent(regret_max_series);
    if (fit.degenerate) {
      summary << "regret_fit_exponent = degenerate (" << fit.nonpositive_count
              << " nonpositive values in the fit window)\n";
    } else {
      summary << "regret_fit_exponent = " << fmt(fit.slope) << "\n";
    }
  }
  if (game.kind == "cournot") {
    summary << "closed_form_vs_solver_gap = " << fmt(closed_form_gap)
            << "  # reference formula disagrees with the solved equilibrium;"
               " the solver is authoritative\n";
  }
  if (tracker) {
    summary << "est_err_margin_min = " << fmt(tracker->est_margin_min()) << "\n"
            << "dual_norm_margin_min = " << fmt(tracker->dual_norm_margin_min()) << "\n"
            << "dual_cons_margin_min = " << fmt(tracker->dual_cons_margin_min()) << "\n"
            << "eps_margin_min = " << fmt(tracker->eps_margin_min()) << "\n"
            << "diagnostics_mode = " << (options.hard_diagnostics ? "hard" : "soft") << "\n";
  } else {
    summary << "diagnostics_mode = off\n";
  }
  summary.close();

  if (!config.source_path.empty()) {
    std::ifstream src(config.source_path, std::ios::binary);
    std::ofstream dst(std::filesystem::path(options.out_dir) /
                          std::filesystem::path(config.source_path).filename(),
                      std::ios::binary);
    dst << src.rdbuf();
  }
  return 0;
}

}  // namespace gneseek
