#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "gneseek/rng.hpp"

namespace gneseek {

enum class GeometryKind { Euclidean, NegativeEntropy };
enum class SetKind { Box, Simplex };

/// Compact convex strategy set. Box keeps per-coordinate bounds; Simplex is
/// the standard probability simplex of the given dimension.
struct FeasibleSet {
  SetKind kind = SetKind::Box;
  int dim = 0;
  Eigen::VectorXd lo, hi;  // Box only

  static FeasibleSet box(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi);
  static FeasibleSet box_uniform(int dim, double lo, double hi);
  static FeasibleSet simplex(int dim);

  /// max_{x in set} ||x||_2, in closed form.
  double radius() const;

  /// Euclidean projection onto the set.
  Eigen::VectorXd project(const Eigen::VectorXd& v) const;

  bool contains(const Eigen::VectorXd& v, double tol) const;

  /// Uniform draw: per-coordinate uniform for Box, exponential-spacings
  /// (exact uniform on the simplex) for Simplex.
  Eigen::VectorXd sample(Rng& rng) const;

  /// Box midpoint / simplex barycenter; a guaranteed feasible point.
  Eigen::VectorXd center() const;
};

/// Mirror-map family. The potential is phi(x) = 0.5*||x||^2 (Euclidean) or
/// phi(x) = sum_j x_j ln x_j (negative entropy), both 1-strongly convex on
/// their paired sets.
struct BregmanGeometry {
  GeometryKind kind = GeometryKind::Euclidean;
  int dim = 0;
  double strong_convexity = 1.0;
  double lipschitz_K = 0.0;  // set via lipschitz_K() when diagnostics need it

  static BregmanGeometry euclidean(int dim);
  static BregmanGeometry negative_entropy(int dim);
};

/// Bregman divergence D_phi(xi, zeta). Negative entropy requires zeta > 0
/// coordinatewise and xi >= 0 (with 0 ln 0 = 0).
double divergence(const BregmanGeometry& geom, const Eigen::VectorXd& xi,
                  const Eigen::VectorXd& zeta);

/// Unique minimizer of alpha*<x, d> + D_phi(x, center) over the set.
/// Supported pairs and their closed forms:
///   Euclidean  x Box:     clip(center - alpha*d)
///   NegEntropy x Simplex: x_j proportional to max(center_j,1e-12)*exp(-alpha*d_j)
/// Any other pairing throws GeometrySetMismatch.
Eigen::VectorXd mirror_step(const BregmanGeometry& geom, const FeasibleSet& set,
                            const Eigen::VectorXd& center,
                            const Eigen::VectorXd& linear_term, double alpha);

/// |<xi-zeta, grad phi(zeta)-grad phi(theta)> - (D(xi,theta)-D(xi,zeta)-D(zeta,theta))|.
/// An algebraic identity of the divergence; exposed for the test suite.
double triangle_identity_residual(const BregmanGeometry& geom,
                                  const Eigen::VectorXd& xi,
                                  const Eigen::VectorXd& zeta,
                                  const Eigen::VectorXd& theta);

/// Lipschitz constant of D_phi(., zeta) over the set: box diameter in closed
/// form for Euclidean, sampled (and inflated 2x) for negative entropy, which
/// is not globally Lipschitz near the boundary.
double lipschitz_K(const BregmanGeometry& geom, const FeasibleSet& set,
                   int samples = 100000, std::uint64_t seed = 0x9E0517);

}  // namespace gneseek
