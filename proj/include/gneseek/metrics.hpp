#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "gneseek/engine.hpp"
#include "gneseek/game.hpp"
#include "gneseek/graph.hpp"
#include "gneseek/schedule.hpp"

namespace gneseek {

/// Player i's dynamic regret prefix sums: partial sums over t of
/// J_{i,t}(x_{i,t}, x*_{-i,t}) - J_{i,t}(x*_t), the learner's action
/// evaluated against the equilibrium profile of the others.
std::vector<double> dynamic_regret(const std::vector<Eigen::VectorXd>& actions,
                                   const std::vector<Eigen::VectorXd>& gne_sequence,
                                   const TimeVaryingGame& game, int i);

/// Accumulated constraint violation prefixes: for each T' <= T, the
/// Euclidean norm of the coordinatewise positive part of sum_{t<=T'} g_t(x_t).
/// Not monotone: later negative g values can shrink the clamped sum.
std::vector<double> constraint_violation(const std::vector<Eigen::VectorXd>& actions,
                                         const TimeVaryingGame& game);

struct FitResult {
  double slope = 0.0;
  bool degenerate = false;     // some value <= 0 inside the fit window
  int nonpositive_count = 0;   // how many, when degenerate
};

/// Least-squares slope of log(series_t) against log(t) over the last half of
/// the horizon (t from floor(T/2) to T; series is 1-indexed by round).
FitResult fit_exponent(const std::vector<double>& series);

/// Constants feeding the runtime bound checks. F = 2LM + 2L.
struct DiagnosticConstants {
  double L = 0.0, M = 0.0, F = 0.0;
  double sigma = 0.0, sigma_m = 0.0;
  int n_players = 0;

  static DiagnosticConstants from(const GameConstants& gc, const GraphTopology& graph);
};

/// Streaming checker for the per-round theoretical bounds:
///   estimate error   ||e_{i,t}|| <= 2*sqrt(N-1)*L*sum_{s<t} sigma^s alpha_{t-1-s}
///                    (plus the tighter t=1 bound sqrt(N-1)*L from zero
///                    initialization of the estimates),
///   dual norms       ||lambda_{i,t}||, ||ltilde_{i,t}|| <= L*gamma_t/beta_t,
///   dual consensus   ||ltilde_{i,t} - mean lambda|| <= sqrt(N)*F*sum_{s<t} sigma_m^s gamma_{t-1-s}^2,
///   dual perturbation ||lambda_{i,t+1} - ltilde_{i,t}|| <= F*gamma_t^2.
/// Margins are bound minus observation; hard mode throws BoundViolated when
/// any margin drops below -1e-9, naming round, player and bound.
class DiagnosticsTracker {
 public:
  DiagnosticsTracker(const DiagnosticConstants& constants,
                     const StepSchedule& schedule, bool hard_mode);

  /// Feed one round, in round order.
  void observe(const RoundObservables& obs);

  // Per-family margins of the last observed round (min over players).
  double round_est_margin() const { return round_est_; }
  double round_dual_margin() const { return round_dual_; }

  // Running minima over all observed rounds.
  double est_margin_min() const { return est_min_; }
  double dual_norm_margin_min() const { return dual_norm_min_; }
  double dual_cons_margin_min() const { return dual_cons_min_; }
  double eps_margin_min() const { return eps_min_; }

  static constexpr double kTolerance = 1e-9;

 private:
  DiagnosticConstants c_;
  StepSchedule schedule_;
  bool hard_ = false;
  int next_t_ = 1;
  double est_sum_ = 1.0;   // sum_{s<t} sigma^s alpha_{t-1-s}, alpha_0 = 1
  double cons_sum_ = 1.0;  // sum_{s<t} sigma_m^s gamma_{t-1-s}^2, gamma_0 = 1
  double round_est_ = 0.0, round_dual_ = 0.0;
  double est_min_, dual_norm_min_, dual_cons_min_, eps_min_;
};

struct MarginReport {
  double est_margin_min = 0.0;
  double dual_norm_margin_min = 0.0;
  double dual_cons_margin_min = 0.0;
  double eps_margin_min = 0.0;
  std::vector<double> per_round_est;   // min over players, per round
  std::vector<double> per_round_dual;  // min over the three dual families
};

/// Post-hoc replay of a stored trace through the same tracker the streaming
/// path uses.
MarginReport diagnostic_margins(const RunTrace& trace,
                                const DiagnosticConstants& constants,
                                const StepSchedule& schedule, bool hard_mode);

}  // namespace gneseek
