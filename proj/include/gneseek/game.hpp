#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gneseek/geometry.hpp"

namespace gneseek {

/// Uniform bound constants of the game: ||x_i||, |J_{i,t}|, ||g_{i,t}|| <= L;
/// ||grad_i J_{i,t}||, ||grad g_{i,t}|| <= M; per-player gradients are
/// H-Lipschitz; the pseudo-gradient is mu-strongly monotone. `analytic` marks
/// closed-form (interval-arithmetic) values as opposed to inflated samples.
struct GameConstants {
  double L = 0.0;
  double M = 0.0;
  double H = 0.0;
  double mu = 0.0;
  bool analytic = false;
};

/// Time-varying game with coupled separable inequality constraints
/// g_t(x) = sum_i g_{i,t}(x_i) <= 0. Oracles are total on R^n (consensus
/// estimates can leave the feasible sets early on), pure and reentrant.
/// Player indices are 0-based; round indices start at 1.
struct TimeVaryingGame {
  std::string kind;  // "cournot", "simplex_test", or custom
  int n_players = 0;
  std::vector<int> action_dims;
  int constraint_dim = 0;
  int horizon = 0;
  std::vector<FeasibleSet> feasible_sets;

  /// J_{i,t}(x) with x the stacked full profile.
  std::function<double(int i, int t, const Eigen::VectorXd& x)> cost;
  /// grad_i J_{i,t}(x), dimension action_dims[i].
  std::function<Eigen::VectorXd(int i, int t, const Eigen::VectorXd& x)> cost_grad;
  /// g_{i,t}(x_i) in R^m.
  std::function<Eigen::VectorXd(int i, int t, const Eigen::VectorXd& xi)> constraint;
  /// Jacobian of g_{i,t} at x_i, m x action_dims[i].
  std::function<Eigen::MatrixXd(int i, int t, const Eigen::VectorXd& xi)> constraint_jac;

  GameConstants constants;

  // Stacking layout, filled by finalize_dims().
  std::vector<int> offsets;
  int total_dim = 0;

  void finalize_dims();
  Eigen::VectorXd segment(const Eigen::VectorXd& x, int i) const {
    return x.segment(offsets[i], action_dims[i]);
  }

  /// g_t(x) = sum_i g_{i,t}(x_i) over the stacked profile.
  Eigen::VectorXd aggregate_constraint(int t, const Eigen::VectorXd& x) const;
  /// Stacked pseudo-gradient F_t(x) = col(grad_1 J_1, ..., grad_N J_N).
  Eigen::VectorXd pseudo_gradient(int t, const Eigen::VectorXd& x) const;
};

/// Nash-Cournot market benchmark: n_i = 1, m = 1, Omega_i = [0,30],
/// J_{i,t}(x) = x_i*(sin(t/12) + 1) - x_i*(22 + i/9 - 0.5*i*sin(t/12) - sum_j x_j)
/// (i 1-based in the formula), g_{i,t}(x_i) = x_i - (10 + sin(t/12)).
/// Constants are exact interval-arithmetic values; mu = 1 analytically.
TimeVaryingGame cournot_game(int n_players, int horizon);

/// Simplex-geometry exercise game: n_i = 3, m = 2,
/// J_{i,t}(x) = 0.5*||x_i - c_{i,t}||^2 + x_i^T Q xbar_{-i} with Q small
/// enough for strong monotonicity, affine Slater-feasible g. Constants are
/// estimated by sampling.
TimeVaryingGame simplex_test_game(int n_players, int horizon);

/// Sampled constants: maxima inflated 1.25x, mu_hat the raw sampled minimum
/// of the monotonicity ratio. Throws AssumptionViolation if mu_hat <= 0.
GameConstants sampled_constants(const TimeVaryingGame& game, int samples,
                                std::uint64_t seed = 0xC0FFEE);

/// Closed-form constants when the game provides them, sampled otherwise.
GameConstants estimate_constants(const TimeVaryingGame& game, int samples = 10000);

/// True if some sampled feasible point is strictly inside the aggregate
/// constraint at round t.
bool slater_holds(const TimeVaryingGame& game, int t, int samples = 2000,
                  std::uint64_t seed = 0x51A7E6);

}  // namespace gneseek
