#include "gneseek/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gneseek/errors.hpp"

namespace gneseek {

namespace {

Eigen::VectorXd dual_weighted_jacobians(const TimeVaryingGame& game, int t,
                                        const Eigen::VectorXd& x,
                                        const Eigen::VectorXd& lambda) {
  Eigen::VectorXd out(game.total_dim);
  for (int i = 0; i < game.n_players; ++i) {
    out.segment(game.offsets[i], game.action_dims[i]) =
        game.constraint_jac(i, t, game.segment(x, i)).transpose() * lambda;
  }
  return out;
}

Eigen::VectorXd project_profile(const TimeVaryingGame& game, const Eigen::VectorXd& v) {
  Eigen::VectorXd out(game.total_dim);
  for (int i = 0; i < game.n_players; ++i) {
    out.segment(game.offsets[i], game.action_dims[i]) =
        game.feasible_sets[i].project(game.segment(v, i));
  }
  return out;
}

double kkt_residual_at(const TimeVaryingGame& game, int t,
                       const Eigen::VectorXd& x, const Eigen::VectorXd& lambda) {
  const Eigen::VectorXd g = game.aggregate_constraint(t, x);
  const Eigen::VectorXd step =
      x - (game.pseudo_gradient(t, x) + dual_weighted_jacobians(game, t, x, lambda));
  const double natural = (x - project_profile(game, step)).norm();
  const double feas = g.cwiseMax(0.0).norm();
  const double slack = std::abs(lambda.dot(g));
  return std::max({natural, feas, slack});
}

}  // namespace

GneSolution solve_vgne(const TimeVaryingGame& game, int t, double tol,
                       int max_iters, const GneSolution* warm) {
  if (!(game.constants.mu > 0.0) || !(game.constants.H > 0.0)) {
    throw ValidationError("game constants must be populated before solving");
  }
  const double root_n_h = std::sqrt(static_cast<double>(game.n_players)) * game.constants.H;
  double eta = game.constants.mu / (root_n_h * root_n_h);

  Eigen::VectorXd x(game.total_dim);
  Eigen::VectorXd lambda = Eigen::VectorXd::Zero(game.constraint_dim);
  if (warm != nullptr && warm->actions.size() == game.total_dim) {
    x = project_profile(game, warm->actions);
    if (warm->multiplier.size() == game.constraint_dim) {
      lambda = warm->multiplier.cwiseMax(0.0);
    }
  } else {
    for (int i = 0; i < game.n_players; ++i) {
      x.segment(game.offsets[i], game.action_dims[i]) = game.feasible_sets[i].center();
    }
  }

  GneSolution best;
  best.actions = x;
  best.multiplier = lambda;
  best.kkt_residual = kkt_residual_at(game, t, x, lambda);
  best.residual_history.push_back(best.kkt_residual);
  const double eta_base = eta;

  constexpr int kCheckEvery = 50;
  bool converged = false;
  int iters_done = 0;
  int sustained = 0;
  for (int k = 0; k < max_iters; ++k) {
    const Eigen::VectorXd g = game.aggregate_constraint(t, x);
    const Eigen::VectorXd drift =
        game.pseudo_gradient(t, x) + dual_weighted_jacobians(game, t, x, lambda);
    const Eigen::VectorXd x_next = project_profile(game, x - eta * drift);
    const Eigen::VectorXd lambda_next = (lambda + eta * g).cwiseMax(0.0);
    x = x_next;
    lambda = lambda_next;
    iters_done = k + 1;

    if (k % kCheckEvery == 0) {
      if (!x.allFinite() || !lambda.allFinite()) {
        eta *= 0.5;
        sustained = 0;
        if (eta < 1e-18) {
          throw NoConvergence("equilibrium iteration lost finiteness at round " +
                              std::to_string(t));
        }
        x = best.actions;
        lambda = best.multiplier;
        continue;
      }
      const double r = kkt_residual_at(game, t, x, lambda);
      best.residual_history.push_back(r);
      if (r < best.kkt_residual) {
        best.kkt_residual = r;
        best.actions = x;
        best.multiplier = lambda;
        if (r < tol) {
          converged = true;
          break;
        }
        // The base step is conservative for well-conditioned rounds; grow it
        // while checks keep improving, fall back on the first stall.
        if (++sustained >= 2) {
          eta = std::min(eta * 1.4, 1e6 * eta_base);
        }
      } else {
        sustained = 0;
        eta = std::max(eta * 0.5, 1e-18);
        if (eta <= 1e-18) {
          throw NoConvergence("equilibrium stepsize underflow at round " +
                              std::to_string(t));
        }
        x = best.actions;
        lambda = best.multiplier;
      }
    }
  }

  if (!converged) {
    if (!slater_holds(game, t)) {
      throw InfeasibleProblem("no sampled strictly feasible point at round " +
                              std::to_string(t) + "; the coupled constraint set looks empty");
    }
    throw NoConvergence("equilibrium solver exhausted " + std::to_string(max_iters) +
                        " iterations at round " + std::to_string(t) +
                        " with residual " + std::to_string(best.kkt_residual));
  }

  // Polish: a short fixed tail of extra iterations, keeping the best
  // iterate seen; residuals are recorded so callers can inspect the tail.
  constexpr int kPolish = 100;
  for (int k = 0; k < kPolish; ++k) {
    const Eigen::VectorXd g = game.aggregate_constraint(t, x);
    const Eigen::VectorXd drift =
        game.pseudo_gradient(t, x) + dual_weighted_jacobians(game, t, x, lambda);
    x = project_profile(game, x - eta * drift);
    lambda = (lambda + eta * g).cwiseMax(0.0);
    const double r = kkt_residual_at(game, t, x, lambda);
    best.residual_history.push_back(r);
    if (r < best.kkt_residual) {
      best.kkt_residual = r;
      best.actions = x;
      best.multiplier = lambda;
    }
  }
  best.iterations = iters_done + kPolish;
  return best;
}

double cournot_closed_form(int i, double t) {
  const double v = (i - 10.0) / 9.0 + (10.0 - i) / 2.0 * std::sin(t / 12.0);
  return std::clamp(v, 0.0, 30.0);
}

double path_length(const std::vector<Eigen::VectorXd>& gne_sequence) {
  double acc = 0.0;
  for (std::size_t k = 0; k + 1 < gne_sequence.size(); ++k) {
    if (gne_sequence[k + 1].size() != gne_sequence[k].size()) {
      throw LengthMismatch("profiles " + std::to_string(k) + " and " +
                           std::to_string(k + 1) + " have different dimensions");
    }
    acc += (gne_sequence[k + 1] - gne_sequence[k]).norm();
  }
  return acc;
}

}  // namespace gneseek
