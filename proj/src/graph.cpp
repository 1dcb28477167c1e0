#include "gneseek/graph.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "gneseek/errors.hpp"

namespace gneseek {

namespace {

constexpr double kStochasticTol = 1e-12;
constexpr double kSpectrumTol = 1e-12;

void validate_weights(const Eigen::MatrixXd& A) {
  const int n = static_cast<int>(A.rows());
  if (n < 2 || A.cols() != n) {
    throw ValidationError("weight matrix must be square with N >= 2, got " +
                          std::to_string(A.rows()) + "x" + std::to_string(A.cols()));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (A(i, j) != A(j, i)) {
        throw ValidationError("weight matrix not symmetric at (" +
                              std::to_string(i) + "," + std::to_string(j) + ")");
      }
      if (A(i, j) < 0.0) {
        throw ValidationError("negative weight at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
      }
    }
    if (A(i, i) <= 0.0) {
      throw ValidationError("diagonal weight must be positive at " + std::to_string(i));
    }
    const double row_sum = A.row(i).sum();
    if (std::abs(row_sum - 1.0) > kStochasticTol) {
      throw ValidationError("row " + std::to_string(i) + " sums to " +
                            std::to_string(row_sum) + ", not 1");
    }
  }
  // Connectivity over nonzero off-diagonal entries.
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n; ++u) {
      if (u != v && !seen[u] && A(v, u) > 0.0) {
        seen[u] = true;
        stack.push_back(u);
      }
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
    throw DisconnectedGraph("weight matrix induces a disconnected graph");
  }
}

}  // namespace

std::pair<double, double> spectral_params(const Eigen::MatrixXd& A) {
  const int n = static_cast<int>(A.rows());

  Eigen::MatrixXd centered = A - Eigen::MatrixXd::Constant(n, n, 1.0 / n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(centered, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw NumericalFailure("eigensolver failed on the centered weight matrix");
  }
  const double sigma_m = es.eigenvalues().maxCoeff();

  double sigma = 0.0;
  Eigen::MatrixXd sub(n - 1, n - 1);
  for (int i = 0; i < n; ++i) {
    for (int r = 0, rr = 0; r < n; ++r) {
      if (r == i) continue;
      for (int c = 0, cc = 0; c < n; ++c) {
        if (c == i) continue;
        sub(rr, cc) = A(r, c);
        ++cc;
      }
      ++rr;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sub_es(sub, Eigen::EigenvaluesOnly);
    if (sub_es.info() != Eigen::Success) {
      throw NumericalFailure("eigensolver failed on principal submatrix " +
                             std::to_string(i));
    }
    sigma = std::max(sigma, sub_es.eigenvalues().cwiseAbs().maxCoeff());
  }

  if (sigma_m <= kSpectrumTol || sigma_m >= 1.0 - kSpectrumTol) {
    throw DegenerateSpectrum("sigma_m = " + std::to_string(sigma_m) +
                             " is not strictly inside (0,1)");
  }
  if (sigma <= kSpectrumTol || sigma >= 1.0 - kSpectrumTol) {
    throw DegenerateSpectrum("sigma = " + std::to_string(sigma) +
                             " is not strictly inside (0,1)");
  }
  return {sigma, sigma_m};
}

GraphTopology from_weights(const Eigen::MatrixXd& weights) {
  validate_weights(weights);
  auto [sigma, sigma_m] = spectral_params(weights);
  return GraphTopology{static_cast<int>(weights.rows()), weights, sigma, sigma_m};
}

Eigen::MatrixXd metropolis_weights(int n_players, const EdgeList& edges) {
  if (n_players < 2) {
    throw ValidationError("metropolis weights need at least 2 players");
  }
  std::vector<int> degree(n_players, 0);
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n_players || b >= n_players) {
      throw InvalidEdge("vertex out of range in edge (" + std::to_string(a) +
                        "," + std::to_string(b) + ")");
    }
    if (a == b) {
      throw InvalidEdge("self-loop at vertex " + std::to_string(a));
    }
    auto key = std::minmax(a, b);
    if (!seen.insert(key).second) {
      throw InvalidEdge("duplicate edge (" + std::to_string(a) + "," +
                        std::to_string(b) + ")");
    }
    ++degree[a];
    ++degree[b];
  }
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n_players, n_players);
  for (auto [a, b] : seen) {
    const double w = 1.0 / (1.0 + std::max(degree[a], degree[b]));
    A(a, b) = w;
    A(b, a) = w;
  }
  for (int i = 0; i < n_players; ++i) {
    A(i, i) = 1.0 - (A.row(i).sum() - A(i, i));
  }
  return A;
}

GraphTopology build_metropolis(int n_players, const EdgeList& edges) {
  return from_weights(metropolis_weights(n_players, edges));
}

GraphTopology build_ring(int n_players) {
  if (n_players == 2) return build_metropolis(2, {{0, 1}});
  EdgeList edges;
  for (int i = 0; i < n_players; ++i) edges.emplace_back(i, (i + 1) % n_players);
  return build_metropolis(n_players, edges);
}

GraphTopology build_path(int n_players) {
  EdgeList edges;
  for (int i = 0; i + 1 < n_players; ++i) edges.emplace_back(i, i + 1);
  return build_metropolis(n_players, edges);
}

GraphTopology build_complete(int n_players) {
  if (n_players < 2) {
    throw ValidationError("complete topology needs at least 2 players");
  }
  const int n = n_players;
  Eigen::MatrixXd A = Eigen::MatrixXd::Constant(n, n, 0.5 / n);
  for (int i = 0; i < n; ++i) A(i, i) = 0.5 + 0.5 / n;
  return from_weights(A);
}

}  // namespace gneseek
