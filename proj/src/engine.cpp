#include "gneseek/engine.hpp"

#include <atomic>
#include <cmath>
#include <string>

#include "gneseek/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gneseek {

namespace {

constexpr double kDriftTol = 1e-12;

void check_inputs(const TimeVaryingGame& game, const GraphTopology& graph,
                  const BregmanGeometry& geom, const StepSchedule& schedule) {
  if (graph.n_players != game.n_players) {
    throw LengthMismatch("graph has " + std::to_string(graph.n_players) +
                         " players, game has " + std::to_string(game.n_players));
  }
  for (int i = 0; i < game.n_players; ++i) {
    if (game.action_dims[i] != geom.dim) {
      throw LengthMismatch("geometry dimension " + std::to_string(geom.dim) +
                           " does not match player " + std::to_string(i));
    }
  }
  if (schedule.horizon < 1 || schedule.horizon > game.horizon) {
    throw ValidationError("schedule horizon " + std::to_string(schedule.horizon) +
                          " must lie in [1, game horizon " +
                          std::to_string(game.horizon) + "]");
  }
}

void check_states(const TimeVaryingGame& game, const std::vector<PlayerState>& states) {
  if (static_cast<int>(states.size()) != game.n_players) {
    throw LengthMismatch("initial states must have one entry per player");
  }
  for (int i = 0; i < game.n_players; ++i) {
    if (states[i].own_action.size() != game.action_dims[i] ||
        static_cast<int>(states[i].estimates.size()) != game.n_players ||
        states[i].multiplier.size() != game.constraint_dim) {
      throw LengthMismatch("initial state of player " + std::to_string(i) +
                           " has wrong shapes");
    }
  }
}

/// Keep an averaged iterate inside its set when accumulated rounding pushes
/// it out; a no-op on the overwhelmingly common in-set path.
Eigen::VectorXd drift_correct(const FeasibleSet& set, Eigen::VectorXd v) {
  if (set.contains(v, kDriftTol)) return v;
  if (set.kind == SetKind::Box) return v.cwiseMax(set.lo).cwiseMin(set.hi);
  v = v.cwiseMax(0.0);
  const double total = v.sum();
  if (!(total > 0.0)) {
    throw NonFiniteState("simplex iterate collapsed to the zero vector");
  }
  return v / total;
}

Eigen::VectorXd stack_actions(const TimeVaryingGame& game,
                              const std::vector<PlayerState>& states) {
  Eigen::VectorXd x(game.total_dim);
  for (int i = 0; i < game.n_players; ++i) {
    x.segment(game.offsets[i], game.action_dims[i]) = states[i].own_action;
  }
  return x;
}

}  // namespace

std::vector<PlayerState> initialize(const TimeVaryingGame& game,
                                    const GraphTopology& graph,
                                    std::uint64_t seed) {
  (void)graph;
  Rng rng(seed);
  std::vector<PlayerState> states(game.n_players);
  for (int i = 0; i < game.n_players; ++i) {
    states[i].own_action = game.feasible_sets[i].sample(rng);
    states[i].estimates.resize(game.n_players);
    for (int h = 0; h < game.n_players; ++h) {
      states[i].estimates[h] = Eigen::VectorXd::Zero(game.action_dims[h]);
    }
    states[i].estimates[i] = states[i].own_action;
    states[i].multiplier = Eigen::VectorXd::Zero(game.constraint_dim);
  }
  return states;
}

std::vector<std::vector<Eigen::VectorXd>> consensus_estimates(
    const std::vector<PlayerState>& states, const GraphTopology& graph) {
  const int n = graph.n_players;
  std::vector<std::vector<Eigen::VectorXd>> out(n);
  for (int i = 0; i < n; ++i) {
    out[i].resize(n);
    for (int h = 0; h < n; ++h) {
      if (h == i) {
        out[i][h] = Eigen::VectorXd::Zero(states[h].own_action.size());
        continue;
      }
      Eigen::VectorXd acc = Eigen::VectorXd::Zero(states[h].own_action.size());
      for (int k = 0; k < n; ++k) {
        const Eigen::VectorXd& contrib =
            (k == h) ? states[k].own_action : states[k].estimates[h];
        acc += graph.weights(i, k) * contrib;
      }
      out[i][h] = acc;
    }
  }
  return out;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> primal_step(
    const PlayerState& state, int i, const Eigen::VectorXd& estimate_vector,
    const Eigen::VectorXd& lambda_tilde, const TimeVaryingGame& game,
    const BregmanGeometry& geom, const StepSchedule& schedule, int t) {
  const double alpha = schedule.alpha(t);
  const double gamma = schedule.gamma(t);
  const Eigen::VectorXd d =
      game.cost_grad(i, t, estimate_vector) +
      gamma * (game.constraint_jac(i, t, state.own_action).transpose() * lambda_tilde);
  const Eigen::VectorXd xtilde =
      mirror_step(geom, game.feasible_sets[i], state.own_action, d, alpha);
  Eigen::VectorXd xnew = (1.0 - alpha) * state.own_action + alpha * xtilde;
  xnew = drift_correct(game.feasible_sets[i], std::move(xnew));
  return {xtilde, xnew};
}

Eigen::VectorXd dual_step(const PlayerState& state, int i,
                          const Eigen::VectorXd& xtilde,
                          const Eigen::VectorXd& lambda_tilde,
                          const TimeVaryingGame& game,
                          const StepSchedule& schedule, int t) {
  const double beta = schedule.beta(t);
  const double gamma = schedule.gamma(t);
  const Eigen::MatrixXd jac = game.constraint_jac(i, t, state.own_action);
  const Eigen::VectorXd b =
      jac * (xtilde - state.own_action) + game.constraint(i, t, state.own_action);
  return (lambda_tilde + gamma * (gamma * b - beta * lambda_tilde)).cwiseMax(0.0);
}

RunTrace run(const TimeVaryingGame& game, const GraphTopology& graph,
             const BregmanGeometry& geom, const StepSchedule& schedule,
             const RunOptions& options, const std::vector<PlayerState>* init) {
  check_inputs(game, graph, geom, schedule);
  std::vector<PlayerState> states =
      init != nullptr ? *init : initialize(game, graph, options.seed);
  check_states(game, states);

  const int n = game.n_players;
  const int T = schedule.horizon;
  RunTrace trace;
  trace.horizon = T;
  trace.n_players = n;
  trace.actions.reserve(T);

  std::vector<Eigen::VectorXd> lambda_tilde(n);
  std::vector<Eigen::VectorXd> xtilde_next(n), x_next(n), lambda_next(n);
  const bool parallel = options.mode == ExecutionMode::Parallel;

  for (int t = 1; t <= T; ++t) {
    // Serial pre-passes: dual mixing and estimate consensus read only
    // round-t state, in fixed index order, so both execution modes see
    // identical values.
    for (int i = 0; i < n; ++i) {
      Eigen::VectorXd acc = Eigen::VectorXd::Zero(game.constraint_dim);
      for (int k = 0; k < n; ++k) acc += graph.weights(i, k) * states[k].multiplier;
      lambda_tilde[i] = acc;
    }
    auto est_next = consensus_estimates(states, graph);
    const Eigen::VectorXd actions_t = stack_actions(game, states);

    std::atomic<int> bad_player{-1};
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (int i = 0; i < n; ++i) {
      try {
        Eigen::VectorXd est_vec(game.total_dim);
        for (int h = 0; h < n; ++h) {
          est_vec.segment(game.offsets[h], game.action_dims[h]) =
              (h == i) ? states[i].own_action : states[i].estimates[h];
        }
        auto [xt, xn] = primal_step(states[i], i, est_vec, lambda_tilde[i], game,
                                    geom, schedule, t);
        Eigen::VectorXd ln =
            dual_step(states[i], i, xt, lambda_tilde[i], game, schedule, t);
        if (!xn.allFinite() || !ln.allFinite()) {
          bad_player = i;
        } else {
          xtilde_next[i] = std::move(xt);
          x_next[i] = std::move(xn);
          lambda_next[i] = std::move(ln);
        }
      } catch (...) {
        bad_player = i;
      }
    }
    if (bad_player >= 0) {
      throw NonFiniteState("round " + std::to_string(t) + " produced a non-finite update for player " +
                           std::to_string(bad_player));
    }

    RoundObservables obs;
    obs.t = t;
    obs.alpha = schedule.alpha(t);
    obs.beta = schedule.beta(t);
    obs.gamma = schedule.gamma(t);
    obs.actions = actions_t;
    obs.lambda_norm.resize(n);
    obs.lambda_tilde_norm.resize(n);
    obs.est_err.resize(n);
    obs.dual_cons_err.resize(n);
    obs.eps_norm.resize(n);
    Eigen::VectorXd lambda_bar = Eigen::VectorXd::Zero(game.constraint_dim);
    for (int k = 0; k < n; ++k) lambda_bar += states[k].multiplier;
    lambda_bar /= static_cast<double>(n);
    for (int i = 0; i < n; ++i) {
      obs.lambda_norm[i] = states[i].multiplier.norm();
      obs.lambda_tilde_norm[i] = lambda_tilde[i].norm();
      double e2 = 0.0;
      for (int h = 0; h < n; ++h) {
        if (h == i) continue;
        e2 += (states[i].estimates[h] - states[h].own_action).squaredNorm();
      }
      obs.est_err[i] = std::sqrt(e2);
      obs.dual_cons_err[i] = (lambda_tilde[i] - lambda_bar).norm();
      obs.eps_norm[i] = (lambda_next[i] - lambda_tilde[i]).norm();
    }
    if (options.sink) options.sink(obs);
    trace.actions.push_back(actions_t);
    trace.lambda_norms.push_back(obs.lambda_norm);
    trace.lambda_tilde_norms.push_back(obs.lambda_tilde_norm);
    trace.est_errs.push_back(obs.est_err);
    trace.dual_cons_errs.push_back(obs.dual_cons_err);
    trace.eps_norms.push_back(obs.eps_norm);

    for (int i = 0; i < n; ++i) {
      states[i].own_action = std::move(x_next[i]);
      states[i].multiplier = std::move(lambda_next[i]);
      states[i].estimates = std::move(est_next[i]);
      states[i].estimates[i] = states[i].own_action;
    }
  }

  trace.final_states = std::move(states);
  return trace;
}

RunTrace run_full_information(const TimeVaryingGame& game,
                              const BregmanGeometry& geom,
                              const StepSchedule& schedule,
                              const RunOptions& options,
                              const std::vector<PlayerState>* init) {
  if (schedule.horizon < 1 || schedule.horizon > game.horizon) {
    throw ValidationError("schedule horizon must lie in [1, game horizon]");
  }
  const int n = game.n_players;
  const int T = schedule.horizon;

  std::vector<PlayerState> states;
  if (init != nullptr) {
    states = *init;
    check_states(game, states);
  } else {
    Rng rng(options.seed);
    states.resize(n);
    for (int i = 0; i < n; ++i) {
      states[i].own_action = game.feasible_sets[i].sample(rng);
      states[i].estimates.assign(n, Eigen::VectorXd());
      states[i].multiplier = Eigen::VectorXd::Zero(game.constraint_dim);
    }
  }
  Eigen::VectorXd lambda = Eigen::VectorXd::Zero(game.constraint_dim);

  RunTrace trace;
  trace.horizon = T;
  trace.n_players = n;
  for (int t = 1; t <= T; ++t) {
    const double alpha = schedule.alpha(t);
    const double beta = schedule.beta(t);
    const double gamma = schedule.gamma(t);
    const Eigen::VectorXd x_t = stack_actions(game, states);
    const Eigen::VectorXd g_t = game.aggregate_constraint(t, x_t);

    std::vector<Eigen::VectorXd> x_next(n);
    for (int i = 0; i < n; ++i) {
      const Eigen::VectorXd d =
          game.cost_grad(i, t, x_t) +
          gamma * (game.constraint_jac(i, t, states[i].own_action).transpose() * lambda);
      x_next[i] = mirror_step(geom, game.feasible_sets[i], states[i].own_action, d, alpha);
    }
    const Eigen::VectorXd lambda_next =
        (lambda + gamma * (gamma * g_t - beta * lambda)).cwiseMax(0.0);

    RoundObservables obs;
    obs.t = t;
    obs.alpha = alpha;
    obs.beta = beta;
    obs.gamma = gamma;
    obs.actions = x_t;
    obs.lambda_norm.assign(n, lambda.norm());
    obs.lambda_tilde_norm.assign(n, lambda.norm());
    obs.est_err.assign(n, 0.0);
    obs.dual_cons_err.assign(n, 0.0);
    obs.eps_norm.assign(n, (lambda_next - lambda).norm());
    if (options.sink) options.sink(obs);
    trace.actions.push_back(x_t);
    trace.lambda_norms.push_back(obs.lambda_norm);
    trace.lambda_tilde_norms.push_back(obs.lambda_tilde_norm);
    trace.est_errs.push_back(obs.est_err);
    trace.dual_cons_errs.push_back(obs.dual_cons_err);
    trace.eps_norms.push_back(obs.eps_norm);

    for (int i = 0; i < n; ++i) {
      if (!x_next[i].allFinite()) {
        throw NonFiniteState("round " + std::to_string(t) +
                             " produced a non-finite update for player " + std::to_string(i));
      }
      states[i].own_action = std::move(x_next[i]);
      states[i].multiplier = lambda_next;
    }
    lambda = lambda_next;
  }
  trace.final_states = std::move(states);
  return trace;
}

GraphTopology single_player_graph() {
  GraphTopology g;
  g.n_players = 1;
  g.weights = Eigen::MatrixXd::Ones(1, 1);
  g.sigma = 0.0;
  g.sigma_m = 0.0;
  return g;
}

}  // namespace gneseek
