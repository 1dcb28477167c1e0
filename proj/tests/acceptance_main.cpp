// Acceptance gate for the equilibrium-seeking stack. Each numbered check
// prints one [PASS]/[FAIL] line with the measured quantities and its
// runtime; the process exit status is the number of failed lines. Checks
// are built directly on the library oracles so a red line points at a
// broken guarantee, not at test plumbing.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gneseek/config.hpp"
#include "gneseek/engine.hpp"
#include "gneseek/equilibrium.hpp"
#include "gneseek/errors.hpp"
#include "gneseek/game.hpp"
#include "gneseek/geometry.hpp"
#include "gneseek/graph.hpp"
#include "gneseek/metrics.hpp"
#include "gneseek/rng.hpp"
#include "gneseek/runner.hpp"
#include "gneseek/schedule.hpp"

using namespace gneseek;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

class Timer {
 public:
  Timer() : t0_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

void verdict(const std::string& id, bool ok, const std::string& detail) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << ": " << detail << "\n";
  std::cout.flush();
  if (!ok) ++g_failures;
}

std::string num(double v, int precision = 6) {
  std::ostringstream out;
  out.precision(precision);
  out << v;
  return out.str();
}

Eigen::VectorXd sample_profile(const TimeVaryingGame& game, Rng& rng) {
  Eigen::VectorXd x(game.total_dim);
  for (int i = 0; i < game.n_players; ++i) {
    x.segment(game.offsets[i], game.action_dims[i]) =
        game.feasible_sets[i].sample(rng);
  }
  return x;
}

// ---------------------------------------------------------------------------
// 1. Topology invariants on the two benchmark graphs.

void check_graphs() {
  Timer tm;
  bool ok = true;
  double worst_row = 0.0;
  std::string spectra;
  for (const char* kind : {"ring", "path"}) {
    const GraphTopology g =
        std::string(kind) == "ring" ? build_ring(20) : build_path(20);
    const Eigen::VectorXd row_dev =
        (g.weights * Eigen::VectorXd::Ones(20) - Eigen::VectorXd::Ones(20));
    worst_row = std::max(worst_row, row_dev.lpNorm<Eigen::Infinity>());
    for (int i = 0; i < 20 && ok; ++i) {
      if (!(g.weights(i, i) > 0.0)) ok = false;
      for (int j = 0; j < 20; ++j) {
        if (g.weights(i, j) != g.weights(j, i)) ok = false;
      }
    }
    if (!(g.sigma > 0.0 && g.sigma < 1.0 && g.sigma_m > 0.0 && g.sigma_m < 1.0)) {
      ok = false;
    }
    spectra += std::string(kind) + "(sigma=" + num(g.sigma) +
               ", sigma_m=" + num(g.sigma_m) + ") ";
  }
  ok = ok && worst_row <= 1e-12;
  const double elapsed = tm.seconds();
  ok = ok && elapsed < 1.0;
  verdict("1 graph validity", ok,
          "ring(20)/path(20) row-sum dev " + num(worst_row) + ", " + spectra +
              "in " + num(elapsed, 3) + " s");
}

// ---------------------------------------------------------------------------
// 2. Mirror step against the box closed form and simplex optimality.

void check_mirror() {
  Timer tm;
  Rng rng(0xACCE5501);
  double worst_box = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int dim = static_cast<int>(rng.uniform_int(1, 6));
    const double lo = rng.uniform(-5.0, 5.0);
    const double hi = lo + rng.uniform(0.5, 10.0);
    const FeasibleSet set = FeasibleSet::box_uniform(dim, lo, hi);
    const BregmanGeometry geom = BregmanGeometry::euclidean(dim);
    const Eigen::VectorXd center = set.sample(rng);
    Eigen::VectorXd d(dim);
    for (int k = 0; k < dim; ++k) d(k) = rng.uniform(-10.0, 10.0);
    const double alpha = rng.uniform(0.01, 1.0);
    const Eigen::VectorXd got = mirror_step(geom, set, center, d, alpha);
    for (int k = 0; k < dim; ++k) {
      const double want = std::min(hi, std::max(lo, center(k) - alpha * d(k)));
      worst_box = std::max(worst_box, std::abs(got(k) - want));
    }
  }

  double worst_excess = -std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < 1000; ++trial) {
    const int dim = static_cast<int>(rng.uniform_int(2, 5));
    const FeasibleSet set = FeasibleSet::simplex(dim);
    const BregmanGeometry geom = BregmanGeometry::negative_entropy(dim);
    const Eigen::VectorXd center = set.sample(rng);
    Eigen::VectorXd d(dim);
    for (int k = 0; k < dim; ++k) d(k) = rng.uniform(-3.0, 3.0);
    const double alpha = rng.uniform(0.01, 1.0);
    const Eigen::VectorXd got = mirror_step(geom, set, center, d, alpha);
    const double obj_got = alpha * d.dot(got) + divergence(geom, got, center);
    for (int s = 0; s < 10000; ++s) {
      const Eigen::VectorXd y = set.sample(rng);
      const double obj_y = alpha * d.dot(y) + divergence(geom, y, center);
      worst_excess = std::max(worst_excess, obj_got - obj_y);
    }
  }
  const double elapsed = tm.seconds();
  const bool ok = worst_box <= 1e-12 && worst_excess <= 1e-9 && elapsed < 10.0;
  verdict("2 mirror step", ok,
          "box vs clip dev " + num(worst_box) + ", simplex best-response excess " +
              num(worst_excess) + ", in " + num(elapsed, 3) + " s");
}

// ---------------------------------------------------------------------------
// 3. Analytic oracles against central finite differences.

void check_oracles() {
  Timer tm;
  const TimeVaryingGame game = cournot_game(20, 500);
  Rng rng(0xACCE5503);
  const double h = 1e-6;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int t = static_cast<int>(rng.uniform_int(1, 500));
    Eigen::VectorXd x(game.total_dim);
    for (int k = 0; k < game.total_dim; ++k) x(k) = rng.uniform(0.0, 30.0);
    for (int i = 0; i < game.n_players; ++i) {
      Eigen::VectorXd hi_x = x, lo_x = x;
      hi_x(game.offsets[i]) += h;
      lo_x(game.offsets[i]) -= h;
      const double fd = (game.cost(i, t, hi_x) - game.cost(i, t, lo_x)) / (2.0 * h);
      const double an = game.cost_grad(i, t, x)(0);
      worst = std::max(worst, std::abs(fd - an) / std::max(1.0, std::abs(an)));

      const Eigen::VectorXd xi = game.segment(x, i);
      const Eigen::VectorXd xi_hi = xi.array() + h, xi_lo = xi.array() - h;
      const double gfd =
          (game.constraint(i, t, xi_hi)(0) - game.constraint(i, t, xi_lo)(0)) /
          (2.0 * h);
      const double gan = game.constraint_jac(i, t, xi)(0, 0);
      worst = std::max(worst, std::abs(gfd - gan) / std::max(1.0, std::abs(gan)));
    }
  }
  const double elapsed = tm.seconds();
  const bool ok = worst <= 1e-6 && elapsed < 5.0;
  verdict("3 oracle consistency", ok,
          "max rel err " + num(worst) + " over 100 (x,t) draws, in " +
              num(elapsed, 3) + " s");
}

// ---------------------------------------------------------------------------
// 4. Equilibrium solver certificates.

void check_vgne() {
  Timer tm;
  const TimeVaryingGame game = cournot_game(20, 100);
  Rng rng(0xACCE5504);
  double max_kkt = 0.0;
  double min_vi = std::numeric_limits<double>::infinity();
  GneSolution prev;
  for (int t = 1; t <= 50; ++t) {
    const GneSolution sol =
        solve_vgne(game, t, 1e-8, 2000000, t == 1 ? nullptr : &prev);
    max_kkt = std::max(max_kkt, sol.kkt_residual);
    const Eigen::VectorXd f_star = game.pseudo_gradient(t, sol.actions);
    for (int s = 0; s < 1000; ++s) {
      const Eigen::VectorXd x = sample_profile(game, rng);
      min_vi = std::min(min_vi, f_star.dot(x - sol.actions));
    }
    prev = sol;
  }

  double restart_spread = 0.0;
  std::vector<GneSolution> restarts;
  for (int r = 0; r < 5; ++r) {
    GneSolution warm;
    warm.actions = sample_profile(game, rng);
    warm.multiplier = Eigen::VectorXd::Zero(game.constraint_dim);
    restarts.push_back(solve_vgne(game, 25, 1e-8, 2000000, &warm));
  }
  for (size_t a = 0; a < restarts.size(); ++a) {
    for (size_t b = a + 1; b < restarts.size(); ++b) {
      restart_spread = std::max(
          restart_spread, (restarts[a].actions - restarts[b].actions).norm());
    }
  }
  const double elapsed = tm.seconds();
  const bool ok = max_kkt <= 1e-8 && min_vi >= -1e-6 && restart_spread <= 1e-7 &&
                  elapsed < 30.0;
  verdict("4 equilibrium oracle", ok,
          "max kkt " + num(max_kkt) + " over 50 rounds, min VI inner product " +
              num(min_vi) + ", restart spread " + num(restart_spread) + ", in " +
              num(elapsed, 3) + " s");
}

// ---------------------------------------------------------------------------
// 5/6. The benchmark reproduction run, shared by the trend and bound checks.

struct CanonMetrics {
  std::vector<double> regret_max_series;
  double reg_rate_250 = 0.0, reg_rate_2000 = 0.0;
  double viol_rate_250 = 0.0, viol_rate_2000 = 0.0;
  bool bound_threw = false;
  std::string bound_what;
  double seconds = 0.0;
};

CanonMetrics canonical_run(const TimeVaryingGame& game, const GraphTopology& graph,
                           const StepSchedule& schedule,
                           const std::vector<Eigen::VectorXd>& gne,
                           DiagnosticsTracker* tracker) {
  Timer tm;
  CanonMetrics out;
  const int n = game.n_players;
  std::vector<double> regret_acc(n, 0.0);
  Eigen::VectorXd viol_acc = Eigen::VectorXd::Zero(game.constraint_dim);
  RunOptions options;
  options.seed = 7;
  options.sink = [&](const RoundObservables& obs) {
    const int t = obs.t;
    const Eigen::VectorXd& x_star = gne[t - 1];
    for (int i = 0; i < n; ++i) {
      Eigen::VectorXd mixed = x_star;
      mixed.segment(game.offsets[i], game.action_dims[i]) =
          game.segment(obs.actions, i);
      regret_acc[i] += game.cost(i, t, mixed) - game.cost(i, t, x_star);
    }
    const double reg_max = *std::max_element(regret_acc.begin(), regret_acc.end());
    out.regret_max_series.push_back(reg_max);
    viol_acc += game.aggregate_constraint(t, obs.actions);
    const double viol = viol_acc.cwiseMax(0.0).norm();
    if (t == 250) {
      out.reg_rate_250 = reg_max / 250.0;
      out.viol_rate_250 = viol / 250.0;
    }
    if (t == 2000) {
      out.reg_rate_2000 = reg_max / 2000.0;
      out.viol_rate_2000 = viol / 2000.0;
    }
    if (tracker) tracker->observe(obs);
  };
  try {
    run(game, graph, BregmanGeometry::euclidean(1), schedule, options);
  } catch (const BoundViolated& e) {
    out.bound_threw = true;
    out.bound_what = e.what();
  }
  out.seconds = tm.seconds();
  return out;
}

void check_benchmark_trends() {
  Timer tm;
  const TimeVaryingGame game = cournot_game(20, 2000);
  const GraphTopology graph = build_ring(20);
  const StepSchedule schedule = StepSchedule::horizon_tuned(0.2, 0.8, 2000);

  std::vector<Eigen::VectorXd> gne;
  gne.reserve(2000);
  GneSolution prev;
  for (int t = 1; t <= 2000; ++t) {
    prev = solve_vgne(game, t, 1e-8, 2000000, t == 1 ? nullptr : &prev);
    gne.push_back(prev.actions);
  }
  const double path_seconds = tm.seconds();

  const CanonMetrics plain = canonical_run(game, graph, schedule, gne, nullptr);
  const double total = tm.seconds();

  // 5a: prefix-averaged regret at the full horizon vs the early checkpoint.
  const double ratio = plain.reg_rate_2000 / plain.reg_rate_250;
  verdict("5a regret trend", ratio <= 0.5 && total < 120.0,
          "max_i Reg_i/T " + num(plain.reg_rate_2000) + " at T=2000 vs " +
              num(plain.reg_rate_250) + " at T=250, ratio " + num(ratio) +
              " (need <= 0.5); equilibrium path " + num(path_seconds, 3) +
              " s, total " + num(total, 3) + " s");

  // 5b: violation rate decays by half or is absolutely negligible.
  const bool viol_ok = plain.viol_rate_2000 <= 1e-6 ||
                       (plain.viol_rate_250 > 0.0 &&
                        plain.viol_rate_2000 <= 0.5 * plain.viol_rate_250);
  verdict("5b violation trend", viol_ok && total < 120.0,
          "R_g/T " + num(plain.viol_rate_2000) + " at T=2000 vs " +
              num(plain.viol_rate_250) + " at T=250");

  // 5c: sublinear fitted exponent over the last half of the horizon.
  const FitResult fit = fit_exponent(plain.regret_max_series);
  verdict("5c regret exponent", !fit.degenerate && fit.slope < 1.0,
          fit.degenerate
              ? "degenerate fit: " + std::to_string(fit.nonpositive_count) +
                    " nonpositive prefix values"
              : "fitted exponent " + num(fit.slope, 10) + " (need < 1.0)");

  // 6: the same run under hard bound checking, margins and overhead.
  DiagnosticsTracker tracker(DiagnosticConstants::from(game.constants, graph),
                             schedule, /*hard=*/true);
  const CanonMetrics diag = canonical_run(game, graph, schedule, gne, &tracker);
  const bool margins_ok =
      !diag.bound_threw &&
      tracker.est_margin_min() >= -DiagnosticsTracker::kTolerance &&
      tracker.dual_norm_margin_min() >= -DiagnosticsTracker::kTolerance &&
      tracker.dual_cons_margin_min() >= -DiagnosticsTracker::kTolerance;
  const bool overhead_ok = diag.seconds <= 2.0 * plain.seconds + 0.1;
  verdict(
      "6 runtime bound checks", margins_ok && overhead_ok,
      diag.bound_threw
          ? "hard mode aborted: " + diag.bound_what
          : "margin minima est " + num(tracker.est_margin_min()) + ", dual norm " +
                num(tracker.dual_norm_margin_min()) + ", dual consensus " +
                num(tracker.dual_cons_margin_min()) + ", perturbation " +
                num(tracker.eps_margin_min()) + "; checked run " +
                num(diag.seconds, 3) + " s vs plain " + num(plain.seconds, 3) +
                " s");
}

// ---------------------------------------------------------------------------
// 7. Degenerate cases that must hold exactly.

TimeVaryingGame flat_game(int n_players, double g_value) {
  TimeVaryingGame g;
  g.kind = "flat";
  g.n_players = n_players;
  g.action_dims.assign(n_players, 1);
  g.constraint_dim = 1;
  g.horizon = 64;
  for (int i = 0; i < n_players; ++i) {
    g.feasible_sets.push_back(FeasibleSet::box_uniform(1, 0.0, 2.0));
  }
  g.cost = [](int, int, const Eigen::VectorXd&) { return 3.0; };
  g.cost_grad = [](int, int, const Eigen::VectorXd&) {
    return Eigen::VectorXd::Zero(1).eval();
  };
  g.constraint = [g_value](int, int, const Eigen::VectorXd&) {
    return Eigen::VectorXd::Constant(1, g_value).eval();
  };
  g.constraint_jac = [](int, int, const Eigen::VectorXd&) {
    return Eigen::MatrixXd::Zero(1, 1).eval();
  };
  g.finalize_dims();
  g.constants = GameConstants{4.0, 4.0, 2.0, 2.0, true};
  return g;
}

void check_degenerate() {
  Timer tm;
  std::string bad;

  // Zero gradient with slack constraints: the start is a fixed point, and
  // every multiplier stays at exactly zero.
  {
    const TimeVaryingGame game = flat_game(2, -1.0);
    const GraphTopology graph = build_complete(2);
    const StepSchedule schedule = StepSchedule::horizon_tuned(0.2, 0.8, 30);
    std::vector<PlayerState> init(2);
    for (int i = 0; i < 2; ++i) {
      init[i].own_action = Eigen::VectorXd::Constant(1, 1.0);
      init[i].estimates.assign(2, Eigen::VectorXd::Zero(1));
      init[i].multiplier = Eigen::VectorXd::Zero(1);
    }
    RunOptions options;
    options.mode = ExecutionMode::Serial;
    const RunTrace trace = run(game, graph, BregmanGeometry::euclidean(1),
                               schedule, options, &init);
    for (int t = 0; t < 30 && bad.empty(); ++t) {
      for (int i = 0; i < 2; ++i) {
        if (trace.actions[t](i) != 1.0) bad = "fixed point drifted";
        if (trace.lambda_norms[t][i] != 0.0) bad = "multiplier left zero";
      }
    }
    for (int i = 0; i < 2 && bad.empty(); ++i) {
      if (trace.final_states[i].own_action(0) != 1.0) bad = "final state drifted";
    }
  }

  // A unit mixing weight reduces the averaged update to the mirror point,
  // checked on a moving target so the mirror point changes every round.
  if (bad.empty()) {
    TimeVaryingGame game = flat_game(1, -0.5);
    game.cost = [](int, int t, const Eigen::VectorXd& x) {
      const double c = 1.0 + 0.5 * std::sin(0.2 * t);
      return (x(0) - c) * (x(0) - c);
    };
    game.cost_grad = [](int, int t, const Eigen::VectorXd& x) {
      const double c = 1.0 + 0.5 * std::sin(0.2 * t);
      return Eigen::VectorXd::Constant(1, 2.0 * (x(0) - c)).eval();
    };
    const StepSchedule schedule = StepSchedule::constant(1.0, 0.2, 0.4, 25);
    PlayerState s;
    s.own_action = Eigen::VectorXd::Constant(1, 0.7);
    s.estimates.assign(1, Eigen::VectorXd::Zero(1));
    s.multiplier = Eigen::VectorXd::Zero(1);
    const BregmanGeometry geom = BregmanGeometry::euclidean(1);
    for (int t = 1; t <= 25 && bad.empty(); ++t) {
      const auto [xtilde, xnew] =
          primal_step(s, 0, s.own_action, s.multiplier, game, geom, schedule, t);
      if (xnew(0) != xtilde(0)) bad = "unit mix is not the mirror point";
      s.own_action = xnew;
    }
  }

  // Nonpositive b keeps the projected dual at exactly zero.
  if (bad.empty()) {
    const TimeVaryingGame game = flat_game(1, -0.7);
    const StepSchedule schedule = StepSchedule::horizon_tuned(0.2, 0.8, 10);
    PlayerState s;
    s.own_action = Eigen::VectorXd::Constant(1, 0.4);
    s.estimates.assign(1, Eigen::VectorXd::Zero(1));
    s.multiplier = Eigen::VectorXd::Zero(1);
    const Eigen::VectorXd xtilde = Eigen::VectorXd::Constant(1, 0.9);
    for (int t = 1; t <= 10 && bad.empty(); ++t) {
      const Eigen::VectorXd next =
          dual_step(s, 0, xtilde, s.multiplier, game, schedule, t);
      if (next(0) != 0.0) bad = "dual clamp produced a nonzero multiplier";
    }
  }

  // Regret against the trace itself vanishes identically.
  if (bad.empty()) {
    const TimeVaryingGame game = cournot_game(4, 20);
    RunOptions options;
    options.seed = 5;
    const RunTrace trace =
        run(game, build_ring(4), BregmanGeometry::euclidean(1),
            StepSchedule::horizon_tuned(0.2, 0.8, 20), options);
    for (int i = 0; i < 4 && bad.empty(); ++i) {
      for (double r : dynamic_regret(trace.actions, trace.actions, game, i)) {
        if (r != 0.0) bad = "self-comparator regret is nonzero";
      }
    }
  }

  verdict("7 degenerate cases", bad.empty(),
          (bad.empty() ? std::string("fixed point, unit mix, dual clamp and "
                                     "self-comparator all exact")
                       : bad) +
              ", in " + num(tm.seconds(), 3) + " s");
}

// ---------------------------------------------------------------------------
// 8. Byte-level reproducibility of the benchmark experiment.

void check_determinism() {
  Timer tm;
  const fs::path scratch =
      fs::temp_directory_path() / ("gneseek_accept_" + std::to_string(::getpid()));
  fs::remove_all(scratch);
  fs::create_directories(scratch);
  const fs::path cfg_path = scratch / "benchmark.cfg";
  {
    std::ofstream cfg(cfg_path);
    cfg << "game.kind = cournot\n"
           "game.n_players = 20\n"
           "graph.kind = ring\n"
           "geometry.kind = euclidean\n"
           "schedule.a1 = 0.2\n"
           "schedule.a2 = 0.8\n"
           "run.horizon = 2000\n"
           "run.seed = 7\n";
  }
  const RunConfig config = parse_config(cfg_path.string());
  auto read_all = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
  };
  ExperimentOptions opt_a, opt_b;
  opt_a.out_dir = (scratch / "a").string();
  opt_b.out_dir = (scratch / "b").string();
  run_experiment(config, opt_a);
  run_experiment(config, opt_b);
  const std::string trace_a = read_all(scratch / "a" / "trace.csv");
  const std::string trace_b = read_all(scratch / "b" / "trace.csv");
  const bool ok = !trace_a.empty() && trace_a == trace_b;
  verdict("8 determinism", ok,
          "two seed-7 runs, trace.csv " + std::to_string(trace_a.size()) +
              " bytes, " + (trace_a == trace_b ? "identical" : "DIFFER") + ", in " +
              num(tm.seconds(), 3) + " s");
  fs::remove_all(scratch);
}

// ---------------------------------------------------------------------------
// 9. The simplex-geometry path end to end.

void check_simplex_path() {
  Timer tm;
  const int T = 500;
  const TimeVaryingGame game = simplex_test_game(5, T);
  const GraphTopology graph = build_ring(5);
  const StepSchedule schedule = StepSchedule::horizon_tuned(0.2, 0.8, T);

  std::vector<Eigen::VectorXd> gne;
  gne.reserve(T);
  GneSolution prev;
  for (int t = 1; t <= T; ++t) {
    prev = solve_vgne(game, t, 1e-8, 2000000, t == 1 ? nullptr : &prev);
    gne.push_back(prev.actions);
  }

  const int n = game.n_players;
  std::vector<double> regret_acc(n, 0.0);
  std::vector<double> regret_max_series;
  regret_max_series.reserve(T);
  double simplex_dev = 0.0;
  RunOptions options;
  options.seed = 3;
  options.sink = [&](const RoundObservables& obs) {
    for (int i = 0; i < n; ++i) {
      const Eigen::VectorXd xi = game.segment(obs.actions, i);
      simplex_dev = std::max(simplex_dev, std::abs(xi.sum() - 1.0));
      simplex_dev = std::max(simplex_dev, -xi.minCoeff());
      Eigen::VectorXd mixed = gne[obs.t - 1];
      mixed.segment(game.offsets[i], game.action_dims[i]) = xi;
      regret_acc[i] += game.cost(i, obs.t, mixed) - game.cost(i, obs.t, gne[obs.t - 1]);
    }
    regret_max_series.push_back(
        *std::max_element(regret_acc.begin(), regret_acc.end()));
  };
  run(game, graph, BregmanGeometry::negative_entropy(3), schedule, options);

  bool finite = true;
  for (double r : regret_acc) finite = finite && std::isfinite(r);
  for (double r : regret_max_series) finite = finite && std::isfinite(r);
  const FitResult fit = fit_exponent(regret_max_series);
  const double elapsed = tm.seconds();
  const bool ok = simplex_dev <= 1e-9 && finite && !fit.degenerate &&
                  fit.slope < 1.0 && elapsed < 30.0;
  verdict("9 simplex path", ok,
          "max simplex deviation " + num(simplex_dev) + ", fitted exponent " +
              (fit.degenerate ? "degenerate" : num(fit.slope, 10)) + ", in " +
              num(elapsed, 3) + " s");
}

}  // namespace

int main() {
  std::cout << "acceptance checks\n-----------------\n";
  check_graphs();
  check_mirror();
  check_oracles();
  check_vgne();
  check_benchmark_trends();
  check_degenerate();
  check_determinism();
  check_simplex_path();
  std::cout << "-----------------\n"
            << (g_failures == 0 ? "all checks passed"
                                : std::to_string(g_failures) + " check(s) failed")
            << "\n";
  return g_failures;
}
