#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

#include "gneseek/game.hpp"
#include "gneseek/geometry.hpp"
#include "gneseek/graph.hpp"
#include "gneseek/schedule.hpp"

namespace gneseek {

/// Per-player state entering a round: own action x_{i,t}, estimates of every
/// other player's action, and the local multiplier lambda_{i,t}. estimates[i]
/// (the own slot) is ignored; the own action is substituted when the full
/// estimate vector is assembled.
struct PlayerState {
  Eigen::VectorXd own_action;
  std::vector<Eigen::VectorXd> estimates;
  Eigen::VectorXd multiplier;
};

/// Everything the trace, metrics and diagnostics need from one round,
/// captured before the round's updates are committed (actions and
/// multipliers are the round-t values; eps_norm looks one step ahead at the
/// dual perturbation committed this round).
struct RoundObservables {
  int t = 0;
  double alpha = 0.0, beta = 0.0, gamma = 0.0;
  Eigen::VectorXd actions;  // stacked x_t
  std::vector<double> lambda_norm;        // ||lambda_{i,t}||
  std::vector<double> lambda_tilde_norm;  // ||ltilde_{i,t}||
  std::vector<double> est_err;            // ||e_{i,t}||, estimate error vs x_t
  std::vector<double> dual_cons_err;      // ||ltilde_{i,t} - mean_j lambda_{j,t}||
  std::vector<double> eps_norm;           // ||lambda_{i,t+1} - ltilde_{i,t}||
};

struct RunTrace {
  int horizon = 0;
  int n_players = 0;
  std::vector<Eigen::VectorXd> actions;  // [T] stacked x_t
  std::vector<std::vector<double>> lambda_norms;
  std::vector<std::vector<double>> lambda_tilde_norms;
  std::vector<std::vector<double>> est_errs;
  std::vector<std::vector<double>> dual_cons_errs;
  std::vector<std::vector<double>> eps_norms;
  std::vector<PlayerState> final_states;  // state after round T
};

enum class ExecutionMode { Serial, Parallel };

struct RunOptions {
  ExecutionMode mode = ExecutionMode::Parallel;
  std::uint64_t seed = 1;
  /// Called once per round in round order, after the round's updates are
  /// computed. Optional.
  std::function<void(const RoundObservables&)> sink;
};

/// Round-1 states: x_{i,1} uniform from Omega_i (seeded), estimates zeroed,
/// multipliers zeroed.
std::vector<PlayerState> initialize(const TimeVaryingGame& game,
                                    const GraphTopology& graph,
                                    std::uint64_t seed);

/// Consensus update for every i and h != i: the a-weighted average over k of
/// player k's round-t estimate of h, with each k's own slot holding its true
/// action. Own slots of the output are left untouched.
std::vector<std::vector<Eigen::VectorXd>> consensus_estimates(
    const std::vector<PlayerState>& states, const GraphTopology& graph);

/// Mirror step plus convex-combination averaging. `estimate_vector` is the
/// stacked profile as player i believes it (own slot = own action);
/// `lambda_tilde` the mixed dual. Returns (xtilde_{i,t+1}, x_{i,t+1}).
std::pair<Eigen::VectorXd, Eigen::VectorXd> primal_step(
    const PlayerState& state, int i, const Eigen::VectorXd& estimate_vector,
    const Eigen::VectorXd& lambda_tilde, const TimeVaryingGame& game,
    const BregmanGeometry& geom, const StepSchedule& schedule, int t);

/// Projected dual update
///   lambda_{i,t+1} = [ltilde + gamma*(gamma*b - beta*ltilde)]_+ with
///   b = grad g_{i,t}(x_{i,t}) * (xtilde_{i,t+1} - x_{i,t}) + g_{i,t}(x_{i,t}).
Eigen::VectorXd dual_step(const PlayerState& state, int i,
                          const Eigen::VectorXd& xtilde,
                          const Eigen::VectorXd& lambda_tilde,
                          const TimeVaryingGame& game,
                          const StepSchedule& schedule, int t);

/// The synchronized round loop over t = 1..horizon. Per round and player:
/// mix duals, assemble the estimate vector, primal step, dual step, estimate
/// consensus; then commit the round barrier. Deterministic for a fixed seed
/// in both execution modes, which produce bit-identical traces (per-player
/// work is independent and writes disjoint slots). `init` overrides the
/// seeded initialization when given (used by tests).
RunTrace run(const TimeVaryingGame& game, const GraphTopology& graph,
             const BregmanGeometry& geom, const StepSchedule& schedule,
             const RunOptions& options,
             const std::vector<PlayerState>* init = nullptr);

/// Centralized full-information baseline: every player sees the true joint
/// action and a single shared multiplier;
///   x_{i,t+1} = argmin alpha*<x, grad_i J(x_t) + gamma*grad g^T lambda_t> + D(x, x_{i,t})
///   lambda_{t+1} = [lambda_t + gamma*(gamma*g_t(x_t) - beta*lambda_t)]_+.
/// No averaging step. Test baseline only.
RunTrace run_full_information(const TimeVaryingGame& game,
                              const BregmanGeometry& geom,
                              const StepSchedule& schedule,
                              const RunOptions& options,
                              const std::vector<PlayerState>* init = nullptr);

/// 1x1 weight-matrix topology for single-player engine runs. The graph
/// module proper requires N >= 2; the engine accepts this degenerate
/// topology so the one-player case stays testable.
GraphTopology single_player_graph();

}  // namespace gneseek
