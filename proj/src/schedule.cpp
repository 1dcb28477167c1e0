#include "gneseek/schedule.hpp"

#include <cmath>
#include <string>

#include "gneseek/errors.hpp"

namespace gneseek {

StepSchedule StepSchedule::horizon_tuned(double a1, double a2, int horizon) {
  if (!(a1 > 0.0 && a1 < 0.5)) {
    throw ValidationError("a1 must lie strictly in (0, 0.5), got " + std::to_string(a1));
  }
  if (!(a2 > 2.0 / 3.0 && a2 < 1.0)) {
    throw ValidationError("a2 must lie strictly in (2/3, 1), got " + std::to_string(a2));
  }
  if (horizon < 1) {
    throw ValidationError("horizon must be >= 1, got " + std::to_string(horizon));
  }
  const double beta_v = std::pow(horizon + 1.0, -a2);
  const double gamma_v = std::pow(horizon + 1.0, -(1.0 - a2));
  StepSchedule s;
  s.horizon = horizon;
  s.alpha = [a1](int t) { return t <= 0 ? 1.0 : std::pow(static_cast<double>(t), -a1); };
  s.beta = [beta_v](int t) { return t <= 0 ? 1.0 : beta_v; };
  s.gamma = [gamma_v](int t) { return t <= 0 ? 1.0 : gamma_v; };
  return s;
}

StepSchedule StepSchedule::constant(double alpha0, double beta0, double gamma0,
                                    int horizon) {
  if (!(alpha0 > 0.0 && alpha0 <= 1.0)) {
    throw ValidationError("constant alpha must lie in (0, 1], got " + std::to_string(alpha0));
  }
  if (!(beta0 > 0.0 && beta0 < 1.0) || !(gamma0 > 0.0 && gamma0 < 1.0)) {
    throw ValidationError("constant beta and gamma must lie in (0, 1)");
  }
  if (horizon < 1) {
    throw ValidationError("horizon must be >= 1, got " + std::to_string(horizon));
  }
  StepSchedule s;
  s.horizon = horizon;
  s.alpha = [alpha0](int t) { return t <= 0 ? 1.0 : alpha0; };
  s.beta = [beta0](int t) { return t <= 0 ? 1.0 : beta0; };
  s.gamma = [gamma0](int t) { return t <= 0 ? 1.0 : gamma0; };
  return s;
}

void StepSchedule::validate() const {
  if (horizon < 1 || !alpha || !beta || !gamma) {
    throw ValidationError("schedule is not fully constructed");
  }
  constexpr double kTol = 1e-12;
  double prev_alpha = 0.0, prev_gamma = 0.0, prev_ratio = 0.0;
  for (int t = 1; t <= horizon; ++t) {
    const double a = alpha(t), b = beta(t), g = gamma(t);
    if (!(a > 0.0 && a <= 1.0)) {
      throw ValidationError("alpha_" + std::to_string(t) + " = " + std::to_string(a) +
                            " leaves (0, 1]");
    }
    if (!(g > 0.0 && g < 1.0)) {
      throw ValidationError("gamma_" + std::to_string(t) + " = " + std::to_string(g) +
                            " leaves (0, 1)");
    }
    if (!(b > 0.0)) {
      throw ValidationError("beta_" + std::to_string(t) + " must be positive");
    }
    const double ratio = g / b;
    if (t >= 2) {
      if (a > prev_alpha + kTol) {
        throw ValidationError("alpha must be non-increasing, violated at t = " +
                              std::to_string(t));
      }
      if (ratio < prev_ratio - kTol) {
        throw ValidationError("gamma/beta must be non-decreasing, violated at t = " +
                              std::to_string(t));
      }
      if (1.0 / g - 1.0 / prev_gamma - b > kTol) {
        throw ValidationError("dual stepsize growth condition fails at t = " +
                              std::to_string(t));
      }
    }
    prev_alpha = a;
    prev_gamma = g;
    prev_ratio = ratio;
  }
}

}  // namespace gneseek
