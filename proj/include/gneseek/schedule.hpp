#pragma once

#include <functional>

namespace gneseek {

/// Stepsize schedules for the round loop. alpha drives the primal mirror
/// step and the convex-combination averaging, gamma the dual ascent, beta
/// the dual regularization. Values at t = 0 are the analysis conventions
/// alpha_0 = beta_0 = gamma_0 = 1 used by the bound recursions.
struct StepSchedule {
  int horizon = 0;
  std::function<double(int)> alpha, beta, gamma;

  /// alpha_t = t^{-a1}, beta_t = (T+1)^{-a2}, gamma_t = (T+1)^{-(1-a2)} with
  /// a1 in (0, 1/2) and a2 in (2/3, 1), both strict. Throws ValidationError
  /// outside those ranges.
  static StepSchedule horizon_tuned(double a1, double a2, int horizon);

  /// Constant sequences, for tests and degenerate cases (e.g. alpha == 1).
  /// beta0 and gamma0 must lie in (0,1).
  static StepSchedule constant(double alpha0, double beta0, double gamma0,
                               int horizon);

  /// Asserts for all t in [1, horizon]: alpha_t in (0,1] non-increasing,
  /// gamma_t in (0,1), gamma_t/beta_t non-decreasing, and for t >= 2
  /// 1/gamma_t - 1/gamma_{t-1} - beta_t <= 0. Throws ValidationError.
  void validate() const;
};

}  // namespace gneseek
