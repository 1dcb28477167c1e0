#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

namespace gneseek {

/// Communication topology: symmetric doubly stochastic weight matrix with
/// positive diagonal over a connected graph, plus the two spectral constants
/// that drive the consensus error bounds.
///
/// sigma   = max_i rho(A_i-) where A_i- deletes row and column i; controls
///           the action-estimate consensus rate.
/// sigma_m = lambda_max(A - 11^T/N); controls the dual averaging rate.
/// Both must lie strictly inside (0,1).
struct GraphTopology {
  int n_players = 0;
  Eigen::MatrixXd weights;
  double sigma = 0.0;
  double sigma_m = 0.0;
};

using EdgeList = std::vector<std::pair<int, int>>;  // 0-based vertex ids

/// Validate a raw weight matrix (symmetry, stochasticity, positive diagonal,
/// connectivity) and compute its spectral constants.
GraphTopology from_weights(const Eigen::MatrixXd& weights);

/// Raw Metropolis-Hastings weight matrix: a_ij = 1/(1+max(deg_i,deg_j)) on
/// edges, diagonal absorbs the remainder. No spectral validation: some
/// topologies (K2, any complete graph, the triangle ring) produce matrices
/// whose sigma_m degenerates to a boundary value.
Eigen::MatrixXd metropolis_weights(int n_players, const EdgeList& edges);

/// metropolis_weights + full validation. Satisfies all topology requirements
/// for any connected simple graph whose spectrum is non-degenerate.
GraphTopology build_metropolis(int n_players, const EdgeList& edges);

GraphTopology build_ring(int n_players);
GraphTopology build_path(int n_players);

/// Complete topology. Metropolis weights on the complete graph collapse to
/// 11^T/N whose sigma_m is exactly 0, so this uses the lazy variant
/// (I + 11^T/N)/2 instead: sigma_m = 1/2, sigma = (2N-1)/(2N).
GraphTopology build_complete(int n_players);

/// (sigma, sigma_m) of a weight matrix assumed to satisfy the invariants.
/// Throws DegenerateSpectrum if either constant leaves (0,1).
std::pair<double, double> spectral_params(const Eigen::MatrixXd& weights);

}  // namespace gneseek
