#include "gneseek/game.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gneseek/errors.hpp"

namespace gneseek {

namespace {

constexpr double kPi = 3.14159265358979323846;

Eigen::VectorXd stacked_sample(const TimeVaryingGame& game, Rng& rng) {
  Eigen::VectorXd x(game.total_dim);
  for (int i = 0; i < game.n_players; ++i) {
    x.segment(game.offsets[i], game.action_dims[i]) = game.feasible_sets[i].sample(rng);
  }
  return x;
}

}  // namespace

void TimeVaryingGame::finalize_dims() {
  if (n_players < 1) {
    throw ValidationError("game needs at least one player");
  }
  if (static_cast<int>(action_dims.size()) != n_players ||
      static_cast<int>(feasible_sets.size()) != n_players) {
    throw LengthMismatch("action_dims and feasible_sets must have one entry per player");
  }
  offsets.assign(n_players, 0);
  total_dim = 0;
  for (int i = 0; i < n_players; ++i) {
    if (action_dims[i] < 1 || feasible_sets[i].dim != action_dims[i]) {
      throw LengthMismatch("feasible set dimension disagrees with action_dims at player " +
                           std::to_string(i));
    }
    offsets[i] = total_dim;
    total_dim += action_dims[i];
  }
  if (constraint_dim < 1 || horizon < 1) {
    throw ValidationError("constraint_dim and horizon must be >= 1");
  }
}

Eigen::VectorXd TimeVaryingGame::aggregate_constraint(int t, const Eigen::VectorXd& x) const {
  Eigen::VectorXd g = Eigen::VectorXd::Zero(constraint_dim);
  for (int i = 0; i < n_players; ++i) {
    g += constraint(i, t, segment(x, i));
  }
  return g;
}

Eigen::VectorXd TimeVaryingGame::pseudo_gradient(int t, const Eigen::VectorXd& x) const {
  Eigen::VectorXd f(total_dim);
  for (int i = 0; i < n_players; ++i) {
    f.segment(offsets[i], action_dims[i]) = cost_grad(i, t, x);
  }
  return f;
}

TimeVaryingGame cournot_game(int n_players, int horizon) {
  if (n_players < 1) {
    throw ValidationError("cournot needs at least one player");
  }
  TimeVaryingGame g;
  g.kind = "cournot";
  g.n_players = n_players;
  g.action_dims.assign(n_players, 1);
  g.constraint_dim = 1;
  g.horizon = horizon;
  for (int i = 0; i < n_players; ++i) {
    g.feasible_sets.push_back(FeasibleSet::box_uniform(1, 0.0, 30.0));
  }
  g.finalize_dims();

  // Market price sin(t/12)+1; player i (1-based) produces at unit cost
  // 22 + i/9 - 0.5*i*sin(t/12) net of the shared demand term.
  auto price = [](int t) { return std::sin(t / 12.0) + 1.0; };
  auto unit_cost = [](int i, int t) {
    return 22.0 + (i + 1) / 9.0 - 0.5 * (i + 1) * std::sin(t / 12.0);
  };
  auto cap = [](int t) { return 10.0 + std::sin(t / 12.0); };

  g.cost = [price, unit_cost](int i, int t, const Eigen::VectorXd& x) {
    return x[i] * (price(t) - unit_cost(i, t) + x.sum());
  };
  g.cost_grad = [price, unit_cost](int i, int t, const Eigen::VectorXd& x) {
    Eigen::VectorXd out(1);
    out[0] = price(t) - unit_cost(i, t) + x.sum() + x[i];
    return out;
  };
  g.constraint = [cap](int /*i*/, int t, const Eigen::VectorXd& xi) {
    Eigen::VectorXd out(1);
    out[0] = xi[0] - cap(t);
    return out;
  };
  g.constraint_jac = [](int, int, const Eigen::VectorXd&) {
    return Eigen::MatrixXd::Identity(1, 1).eval();
  };

  // Exact interval bounds over Omega = [0,30]^N, all t. The gradient
  // s - c_i + sum(x) + x_i has the interval [-c_hi, 2 - c_lo + 30N + 30]
  // per player; costs multiply the inner interval by x_i <= 30.
  double c_lo = std::numeric_limits<double>::infinity();
  double c_hi = -std::numeric_limits<double>::infinity();
  for (int i = 1; i <= n_players; ++i) {
    c_lo = std::min(c_lo, 22.0 + i / 9.0 - 0.5 * i);
    c_hi = std::max(c_hi, 22.0 + i / 9.0 + 0.5 * i);
  }
  const double inner_hi = 2.0 - c_lo + 30.0 * n_players;
  const double cost_bound = 30.0 * std::max(inner_hi, c_hi);
  const double cons_bound = std::max(std::abs(0.0 - (10.0 + 1.0)), 30.0 - 9.0);
  g.constants.L = std::max({30.0, cost_bound, cons_bound});
  g.constants.M = std::max({inner_hi + 30.0, c_hi, 1.0});
  g.constants.H = std::sqrt(n_players + 3.0);
  g.constants.mu = 1.0;
  g.constants.analytic = true;
  return g;
}

TimeVaryingGame simplex_test_game(int n_players, int horizon) {
  if (n_players < 2) {
    throw ValidationError("simplex_test needs at least two players");
  }
  constexpr int d = 3;
  TimeVaryingGame g;
  g.kind = "simplex_test";
  g.n_players = n_players;
  g.action_dims.assign(n_players, d);
  g.constraint_dim = 2;
  g.horizon = horizon;
  for (int i = 0; i < n_players; ++i) {
    g.feasible_sets.push_back(FeasibleSet::simplex(d));
  }
  g.finalize_dims();

  Eigen::Matrix3d R;
  R << 1.0, 0.5, 0.0,
       0.0, 1.0, 0.5,
       0.5, 0.0, 1.0;
  const Eigen::Matrix3d Q = 0.1 * R;
  Eigen::Matrix<double, 2, 3> A;
  A << 1.0, 0.4, 0.1,
       0.1, 0.4, 1.0;

  const int n = n_players;
  auto target = [n](int i, int t) {
    Eigen::Vector3d c;
    for (int k = 0; k < d; ++k) {
      c[k] = 0.5 + 0.3 * std::sin(t / 60.0 + 2.0 * kPi * (i * d + k) / (3.0 * n));
    }
    return c;
  };
  auto budget = [](int i, int t) {
    Eigen::Vector2d b;
    b[0] = 0.52 + 0.08 * std::sin(t / 20.0 + i);
    b[1] = 0.52 + 0.08 * std::cos(t / 25.0 + 2.0 * i);
    return b;
  };
  auto mean_others = [n](int i, const Eigen::VectorXd& x) {
    Eigen::Vector3d sum = Eigen::Vector3d::Zero();
    for (int j = 0; j < n; ++j) sum += x.segment<d>(d * j);
    return Eigen::Vector3d((sum - Eigen::Vector3d(x.segment<d>(d * i))) / (n - 1.0));
  };

  g.cost = [Q, target, mean_others](int i, int t, const Eigen::VectorXd& x) {
    const Eigen::Vector3d xi = x.segment<d>(d * i);
    const Eigen::Vector3d diff = xi - target(i, t);
    return 0.5 * diff.squaredNorm() + xi.dot(Q * mean_others(i, x));
  };
  g.cost_grad = [Q, target, mean_others](int i, int t, const Eigen::VectorXd& x) {
    const Eigen::Vector3d xi = x.segment<d>(d * i);
    return Eigen::VectorXd((xi - target(i, t)) + Q * mean_others(i, x));
  };
  g.constraint = [A, budget](int i, int t, const Eigen::VectorXd& xi) {
    return Eigen::VectorXd(A * xi - budget(i, t));
  };
  g.constraint_jac = [A](int, int, const Eigen::VectorXd&) {
    return Eigen::MatrixXd(A);
  };

  g.constants = sampled_constants(g, 4000);
  return g;
}

GameConstants sampled_constants(const TimeVaryingGame& game, int samples,
                                std::uint64_t seed) {
  if (game.total_dim == 0) {
    throw ValidationError("finalize_dims must run before constants are sampled");
  }
  Rng rng(seed);
  double L = 0.0, M = 0.0, H = 0.0;
  double mu = std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    const int t = static_cast<int>(rng.uniform_int(1, game.horizon));
    const Eigen::VectorXd x = stacked_sample(game, rng);
    const Eigen::VectorXd y = stacked_sample(game, rng);
    const double dx_norm2 = (x - y).squaredNorm();
    for (int i = 0; i < game.n_players; ++i) {
      const Eigen::VectorXd xi = game.segment(x, i);
      L = std::max({L, xi.norm(), std::abs(game.cost(i, t, x)),
                    game.constraint(i, t, xi).norm()});
      const Eigen::VectorXd gx = game.cost_grad(i, t, x);
      M = std::max(M, gx.norm());
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(game.constraint_jac(i, t, xi));
      M = std::max(M, svd.singularValues()(0));
      if (dx_norm2 > 1e-18) {
        H = std::max(H, (gx - game.cost_grad(i, t, y)).norm() / std::sqrt(dx_norm2));
      }
    }
    if (dx_norm2 > 1e-18) {
      const double inner =
          (game.pseudo_gradient(t, x) - game.pseudo_gradient(t, y)).dot(x - y);
      mu = std::min(mu, inner / dx_norm2);
    }
  }
  if (!(mu > 0.0)) {
    throw AssumptionViolation("sampled monotonicity constant is not positive: mu_hat = " +
                              std::to_string(mu));
  }
  return GameConstants{1.25 * L, 1.25 * M, 1.25 * H, mu, false};
}

GameConstants estimate_constants(const TimeVaryingGame& game, int samples) {
  if (game.constants.L > 0.0) return game.constants;
  return sampled_constants(game, samples);
}

bool slater_holds(const TimeVaryingGame& game, int t, int samples,
                  std::uint64_t seed) {
  Eigen::VectorXd x(game.total_dim);
  for (int i = 0; i < game.n_players; ++i) {
    x.segment(game.offsets[i], game.action_dims[i]) = game.feasible_sets[i].center();
  }
  if (game.aggregate_constraint(t, x).maxCoeff() < 0.0) return true;
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    x = stacked_sample(game, rng);
    if (game.aggregate_constraint(t, x).maxCoeff() < 0.0) return true;
  }
  return false;
}

}  // namespace gneseek
