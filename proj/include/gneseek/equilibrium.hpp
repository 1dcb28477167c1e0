#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gneseek/game.hpp"

namespace gneseek {

/// Variational equilibrium certificate for one round.
struct GneSolution {
  Eigen::VectorXd actions;     // stacked profile in Omega
  Eigen::VectorXd multiplier;  // shared dual, >= 0
  double kkt_residual = 0.0;
  int iterations = 0;
  /// Residuals recorded at every solver check and at each of the final
  /// polish iterations; the tail is non-increasing once steps stabilize.
  std::vector<double> residual_history;
};

/// Unique variational equilibrium of round t via centralized projected
/// primal-dual fixed-point iteration:
///   x      <- P_Omega(x - eta*(F_t(x) + grad g_t(x)^T lambda))
///   lambda <- [lambda + eta*g_t(x)]_+
/// with eta starting from mu/(sqrt(N)*H)^2, grown while periodic residual
/// checks keep improving and halved (restoring the best iterate) on stall
/// or divergence. kkt_residual is the
/// max of the unit-step natural-map residual, ||[g]_+|| and |lambda^T g|.
/// Warm starts from `warm` when given. Throws NoConvergence after max_iters
/// (InfeasibleProblem instead if the round fails the Slater sampling check).
GneSolution solve_vgne(const TimeVaryingGame& game, int t, double tol = 1e-8,
                       int max_iters = 2000000, const GneSolution* warm = nullptr);

/// The Cournot reference formula clip((i-10)/9 + (10-i)/2 * sin(t/12), 0, 30),
/// i 1-based. Kept as a cross-check only: the numerical solver is the
/// authoritative equilibrium oracle (see solve_vgne), and the run summary
/// reports the discrepancy between the two.
double cournot_closed_form(int i, double t);

/// sum_k ||seq[k+1] - seq[k]||_2 over a sequence of stacked profiles.
double path_length(const std::vector<Eigen::VectorXd>& gne_sequence);

}  // namespace gneseek
