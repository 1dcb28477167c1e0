#include "gneseek/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gneseek/errors.hpp"

namespace gneseek {

std::vector<double> dynamic_regret(const std::vector<Eigen::VectorXd>& actions,
                                   const std::vector<Eigen::VectorXd>& gne_sequence,
                                   const TimeVaryingGame& game, int i) {
  if (gne_sequence.size() < actions.size()) {
    throw LengthMismatch("equilibrium sequence shorter than the action trace");
  }
  std::vector<double> prefixes(actions.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < actions.size(); ++k) {
    const int t = static_cast<int>(k) + 1;
    Eigen::VectorXd mixed = gne_sequence[k];
    mixed.segment(game.offsets[i], game.action_dims[i]) = game.segment(actions[k], i);
    acc += game.cost(i, t, mixed) - game.cost(i, t, gne_sequence[k]);
    prefixes[k] = acc;
  }
  return prefixes;
}

std::vector<double> constraint_violation(const std::vector<Eigen::VectorXd>& actions,
                                         const TimeVaryingGame& game) {
  std::vector<double> prefixes(actions.size());
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(game.constraint_dim);
  for (std::size_t k = 0; k < actions.size(); ++k) {
    acc += game.aggregate_constraint(static_cast<int>(k) + 1, actions[k]);
    prefixes[k] = acc.cwiseMax(0.0).norm();
  }
  return prefixes;
}

FitResult fit_exponent(const std::vector<double>& series) {
  const int T = static_cast<int>(series.size());
  if (T < 4) {
    throw ValidationError("exponent fit needs at least 4 rounds, got " +
                          std::to_string(T));
  }
  const int lo = T / 2;
  FitResult result;
  for (int t = lo; t <= T; ++t) {
    if (!(series[t - 1] > 0.0)) {
      result.degenerate = true;
      ++result.nonpositive_count;
    }
  }
  if (result.degenerate) return result;

  const int count = T - lo + 1;
  double mean_x = 0.0, mean_y = 0.0;
  for (int t = lo; t <= T; ++t) {
    mean_x += std::log(static_cast<double>(t));
    mean_y += std::log(series[t - 1]);
  }
  mean_x /= count;
  mean_y /= count;
  double sxy = 0.0, sxx = 0.0;
  for (int t = lo; t <= T; ++t) {
    const double dx = std::log(static_cast<double>(t)) - mean_x;
    sxy += dx * (std::log(series[t - 1]) - mean_y);
    sxx += dx * dx;
  }
  result.slope = sxy / sxx;
  return result;
}

DiagnosticConstants DiagnosticConstants::from(const GameConstants& gc,
                                              const GraphTopology& graph) {
  DiagnosticConstants c;
  c.L = gc.L;
  c.M = gc.M;
  c.F = 2.0 * gc.L * gc.M + 2.0 * gc.L;
  c.sigma = graph.sigma;
  c.sigma_m = graph.sigma_m;
  c.n_players = graph.n_players;
  return c;
}

DiagnosticsTracker::DiagnosticsTracker(const DiagnosticConstants& constants,
                                       const StepSchedule& schedule, bool hard_mode)
    : c_(constants), schedule_(schedule), hard_(hard_mode) {
  if (c_.n_players < 2) {
    throw ValidationError("diagnostics need at least 2 players");
  }
  if (!(c_.L > 0.0) || !(c_.M > 0.0) || !(c_.sigma > 0.0) || !(c_.sigma < 1.0) ||
      !(c_.sigma_m > 0.0) || !(c_.sigma_m < 1.0)) {
    throw ValidationError("diagnostic constants are not in their valid ranges");
  }
  const double inf = std::numeric_limits<double>::infinity();
  est_min_ = dual_norm_min_ = dual_cons_min_ = eps_min_ = inf;
}

void DiagnosticsTracker::observe(const RoundObservables& obs) {
  if (obs.t != next_t_) {
    throw ValidationError("rounds must be observed in order; expected " +
                          std::to_string(next_t_) + ", got " + std::to_string(obs.t));
  }
  const int n = c_.n_players;
  if (static_cast<int>(obs.est_err.size()) != n) {
    throw LengthMismatch("observables carry " + std::to_string(obs.est_err.size()) +
                         " players, diagnostics expect " + std::to_string(n));
  }
  const int t = obs.t;
  const double root_nm1_l = std::sqrt(n - 1.0) * c_.L;
  const double est_bound = (t == 1) ? root_nm1_l : 2.0 * root_nm1_l * est_sum_;
  const double dual_bound = c_.L * obs.gamma / obs.beta;
  const double cons_bound = std::sqrt(static_cast<double>(n)) * c_.F * cons_sum_;
  const double eps_bound = c_.F * obs.gamma * obs.gamma;

  auto fail = [&](const char* family, int player, double bound, double observed) {
    throw BoundViolated(std::string(family) + " bound failed at round " +
                        std::to_string(t) + ", player " + std::to_string(player + 1) +
                        ": bound " + std::to_string(bound) + ", observed " +
                        std::to_string(observed));
  };

  double round_est = std::numeric_limits<double>::infinity();
  double round_dual = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double m_est = est_bound - obs.est_err[i];
    const double m_lam = dual_bound - obs.lambda_norm[i];
    const double m_til = dual_bound - obs.lambda_tilde_norm[i];
    const double m_cons = cons_bound - obs.dual_cons_err[i];
    const double m_eps = eps_bound - obs.eps_norm[i];
    if (hard_) {
      if (m_est < -kTolerance) fail("estimate consensus", i, est_bound, obs.est_err[i]);
      if (m_lam < -kTolerance) fail("multiplier norm", i, dual_bound, obs.lambda_norm[i]);
      if (m_til < -kTolerance) fail("mixed multiplier norm", i, dual_bound, obs.lambda_tilde_norm[i]);
      if (m_cons < -kTolerance) fail("multiplier consensus", i, cons_bound, obs.dual_cons_err[i]);
      if (m_eps < -kTolerance) fail("multiplier perturbation", i, eps_bound, obs.eps_norm[i]);
    }
    round_est = std::min(round_est, m_est);
    round_dual = std::min({round_dual, m_lam, m_til, m_cons, m_eps});
    est_min_ = std::min(est_min_, m_est);
    dual_norm_min_ = std::min({dual_norm_min_, m_lam, m_til});
    dual_cons_min_ = std::min(dual_cons_min_, m_cons);
    eps_min_ = std::min(eps_min_, m_eps);
  }
  round_est_ = round_est;
  round_dual_ = round_dual;

  est_sum_ = schedule_.alpha(t) + c_.sigma * est_sum_;
  cons_sum_ = obs.gamma * obs.gamma + c_.sigma_m * cons_sum_;
  ++next_t_;
}

MarginReport diagnostic_margins(const RunTrace& trace,
                                const DiagnosticConstants& constants,
                                const StepSchedule& schedule, bool hard_mode) {
  DiagnosticsTracker tracker(constants, schedule, hard_mode);
  MarginReport report;
  report.per_round_est.reserve(trace.horizon);
  report.per_round_dual.reserve(trace.horizon);
  for (int t = 1; t <= trace.horizon; ++t) {
    RoundObservables obs;
    obs.t = t;
    obs.alpha = schedule.alpha(t);
    obs.beta = schedule.beta(t);
    obs.gamma = schedule.gamma(t);
    obs.actions = trace.actions[t - 1];
    obs.lambda_norm = trace.lambda_norms[t - 1];
    obs.lambda_tilde_norm = trace.lambda_tilde_norms[t - 1];
    obs.est_err = trace.est_errs[t - 1];
    obs.dual_cons_err = trace.dual_cons_errs[t - 1];
    obs.eps_norm = trace.eps_norms[t - 1];
    tracker.observe(obs);
    report.per_round_est.push_back(tracker.round_est_margin());
    report.per_round_dual.push_back(tracker.round_dual_margin());
  }
  report.est_margin_min = tracker.est_margin_min();
  report.dual_norm_margin_min = tracker.dual_norm_margin_min();
  report.dual_cons_margin_min = tracker.dual_cons_margin_min();
  report.eps_margin_min = tracker.eps_margin_min();
  return report;
}

}  // namespace gneseek
