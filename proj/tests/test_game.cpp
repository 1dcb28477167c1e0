#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "gneseek/errors.hpp"
#include "gneseek/game.hpp"
#include "gneseek/rng.hpp"

using namespace gneseek;

namespace {

Eigen::VectorXd random_profile(const TimeVaryingGame& game, Rng& rng) {
  Eigen::VectorXd x(game.total_dim);
  for (int i = 0; i < game.n_players; ++i) {
    x.segment(game.offsets[i], game.action_dims[i]) = game.feasible_sets[i].sample(rng);
  }
  return x;
}

// Central finite differences of the cost and constraint oracles against the
// analytic gradients/Jacobians, relative to max(1, |analytic|).
void check_oracle_consistency(const TimeVaryingGame& game, int rounds) {
  Rng rng(0xFD);
  const double h = 1e-6;
  for (int s = 0; s < rounds; ++s) {
    const int t = 1 + static_cast<int>(rng.uniform_int(0, game.horizon - 1));
    Eigen::VectorXd x = random_profile(game, rng);
    for (int i = 0; i < game.n_players; ++i) {
      const Eigen::VectorXd grad = game.cost_grad(i, t, x);
      for (int j = 0; j < game.action_dims[i]; ++j) {
        Eigen::VectorXd xp = x, xm = x;
        xp(game.offsets[i] + j) += h;
        xm(game.offsets[i] + j) -= h;
        const double fd = (game.cost(i, t, xp) - game.cost(i, t, xm)) / (2 * h);
        CHECK(std::abs(fd - grad(j)) <= 1e-6 * std::max(1.0, std::abs(grad(j))));
      }
      const Eigen::VectorXd xi = game.segment(x, i);
      const Eigen::MatrixXd jac = game.constraint_jac(i, t, xi);
      for (int j = 0; j < game.action_dims[i]; ++j) {
        Eigen::VectorXd xp = xi, xm = xi;
        xp(j) += h;
        xm(j) -= h;
        const Eigen::VectorXd col =
            (game.constraint(i, t, xp) - game.constraint(i, t, xm)) / (2 * h);
        for (int r = 0; r < game.constraint_dim; ++r) {
          CHECK(std::abs(col(r) - jac(r, j)) <=
                1e-6 * std::max(1.0, std::abs(jac(r, j))));
        }
      }
    }
  }
}

TimeVaryingGame quadratic_toy(double curvature) {
  TimeVaryingGame g;
  g.kind = "toy";
  g.n_players = 2;
  g.action_dims = {1, 1};
  g.constraint_dim = 1;
  g.horizon = 10;
  g.feasible_sets = {FeasibleSet::box_uniform(1, 0.0, 1.0),
                     FeasibleSet::box_uniform(1, 0.0, 1.0)};
  g.cost = [curvature](int i, int, const Eigen::VectorXd& x) {
    return curvature * x(i) * x(i);
  };
  g.cost_grad = [curvature](int i, int, const Eigen::VectorXd& x) {
    return Eigen::VectorXd::Constant(1, 2.0 * curvature * x(i)).eval();
  };
  g.constraint = [](int, int, const Eigen::VectorXd&) {
    return Eigen::VectorXd::Zero(1).eval();
  };
  g.constraint_jac = [](int, int, const Eigen::VectorXd&) {
    return Eigen::MatrixXd::Zero(1, 1).eval();
  };
  g.finalize_dims();
  return g;
}

}  // namespace

TEST_SUITE("game") {

TEST_CASE("cournot shape and hand-evaluated oracles") {
  const TimeVaryingGame g = cournot_game(20, 2000);
  CHECK(g.n_players == 20);
  CHECK(g.constraint_dim == 1);
  CHECK(g.total_dim == 20);
  for (int i = 0; i < 20; ++i) {
    CHECK(g.action_dims[i] == 1);
    CHECK(g.feasible_sets[i].lo(0) == 0.0);
    CHECK(g.feasible_sets[i].hi(0) == 30.0);
  }

  Rng rng(1);
  const Eigen::VectorXd x = random_profile(g, rng);
  for (int t : {1, 7, 19, 300}) {
    const double s = std::sin(t / 12.0) + 1.0;
    for (int i = 0; i < 20; ++i) {
      const double ci = 22.0 + (i + 1) / 9.0 - 0.5 * (i + 1) * std::sin(t / 12.0);
      const double expect = s - ci + x.sum() + x(i);
      CHECK(g.cost_grad(i, t, x)(0) == doctest::Approx(expect).epsilon(1e-12));
      CHECK(g.cost(i, t, x) == doctest::Approx(x(i) * (s - ci + x.sum())).epsilon(1e-12));
      // g_{i,t}(x_i) = x_i - (10 + sin(t/12)); at x_i = 10 this is -sin(t/12).
      const Eigen::VectorXd ten = Eigen::VectorXd::Constant(1, 10.0);
      CHECK(g.constraint(i, t, ten)(0) ==
            doctest::Approx(-std::sin(t / 12.0)).epsilon(1e-14));
      CHECK(g.constraint_jac(i, t, ten)(0, 0) == 1.0);
    }
  }
}

TEST_CASE("cournot oracles match finite differences") {
  check_oracle_consistency(cournot_game(6, 100), 20);
}

TEST_CASE("cournot interval constants") {
  const TimeVaryingGame g = cournot_game(20, 2000);
  CHECK(g.constants.analytic);
  CHECK(g.constants.L == doctest::Approx(52900.0 / 3.0).epsilon(1e-12));
  CHECK(g.constants.M == doctest::Approx(5560.0 / 9.0).epsilon(1e-12));
  CHECK(g.constants.H == doctest::Approx(std::sqrt(23.0)).epsilon(1e-12));
  CHECK(g.constants.mu == 1.0);
  CHECK(estimate_constants(g).L == g.constants.L);
}

TEST_CASE("cournot sampled monotonicity agrees with the analytic modulus") {
  const TimeVaryingGame g = cournot_game(20, 2000);
  const GameConstants sampled = sampled_constants(g, 10000);
  CHECK(sampled.mu >= 1.0 - 1e-9);
  CHECK_FALSE(sampled.analytic);
}

TEST_CASE("aggregate constraint is the per-player sum") {
  const TimeVaryingGame g = cournot_game(8, 50);
  Rng rng(4);
  for (int s = 0; s < 20; ++s) {
    const Eigen::VectorXd x = random_profile(g, rng);
    const int t = 1 + static_cast<int>(rng.uniform_int(0, 49));
    Eigen::VectorXd manual = Eigen::VectorXd::Zero(g.constraint_dim);
    for (int i = 0; i < g.n_players; ++i) {
      manual += g.constraint(i, t, g.segment(x, i));
    }
    CHECK((g.aggregate_constraint(t, x) - manual).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("pseudo gradient stacks the per-player gradients") {
  const TimeVaryingGame g = simplex_test_game(4, 100);
  Rng rng(8);
  const Eigen::VectorXd x = random_profile(g, rng);
  const Eigen::VectorXd f = g.pseudo_gradient(13, x);
  for (int i = 0; i < g.n_players; ++i) {
    CHECK((f.segment(g.offsets[i], 3) - g.cost_grad(i, 13, x)).norm() == 0.0);
  }
}

TEST_CASE("slater point exists for both built-in games") {
  const TimeVaryingGame cournot = cournot_game(20, 2000);
  const TimeVaryingGame simplex = simplex_test_game(5, 500);
  for (int t : {1, 100, 1777}) CHECK(slater_holds(cournot, t));
  for (int t : {1, 250, 500}) CHECK(slater_holds(simplex, t));
  // x = 0 is strictly feasible for the Cournot capacity constraint.
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(20);
  CHECK(cournot.aggregate_constraint(44, zero)(0) < 0.0);
}

TEST_CASE("simplex game shape, oracles and sampled constants") {
  const TimeVaryingGame g = simplex_test_game(5, 500);
  CHECK(g.n_players == 5);
  CHECK(g.constraint_dim == 2);
  CHECK(g.total_dim == 15);
  for (const FeasibleSet& s : g.feasible_sets) CHECK(s.kind == SetKind::Simplex);
  CHECK_FALSE(g.constants.analytic);
  CHECK(g.constants.mu > 0.0);
  CHECK(g.constants.L > 0.0);
  CHECK(g.constants.H > 0.0);
  // Constraint is affine with the fixed 2x3 coefficient matrix.
  Eigen::VectorXd xi(3);
  xi << 0.2, 0.3, 0.5;
  const Eigen::MatrixXd jac = g.constraint_jac(2, 9, xi);
  CHECK(jac(0, 0) == 1.0);
  CHECK(jac(0, 1) == 0.4);
  CHECK(jac(0, 2) == 0.1);
  CHECK(jac(1, 0) == 0.1);
  CHECK(jac(1, 1) == 0.4);
  CHECK(jac(1, 2) == 1.0);
  const Eigen::VectorXd gv = g.constraint(2, 9, xi);
  const double b0 = 0.52 + 0.08 * std::sin(9 / 20.0 + 2);
  const double b1 = 0.52 + 0.08 * std::cos(9 / 25.0 + 4);
  CHECK(gv(0) == doctest::Approx(0.2 + 0.4 * 0.3 + 0.1 * 0.5 - b0).epsilon(1e-14));
  CHECK(gv(1) == doctest::Approx(0.1 * 0.2 + 0.4 * 0.3 + 0.5 - b1).epsilon(1e-14));

  check_oracle_consistency(g, 10);
}

TEST_CASE("constant estimation rejects non-monotone games") {
  CHECK_THROWS_AS(sampled_constants(quadratic_toy(-1.0), 500), AssumptionViolation);
  const GameConstants ok = sampled_constants(quadratic_toy(1.0), 500);
  CHECK(ok.mu > 0.0);
}

TEST_CASE("slater check fails on an everywhere-violated constraint") {
  TimeVaryingGame g = quadratic_toy(1.0);
  g.constraint = [](int, int, const Eigen::VectorXd&) {
    return Eigen::VectorXd::Constant(1, 1.0).eval();
  };
  CHECK_FALSE(slater_holds(g, 1));
}

}  // TEST_SUITE("game")
