#include "gneseek/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "gneseek/errors.hpp"

namespace gneseek {

namespace {

constexpr double kEntropyFloor = 1e-12;

void check_dim(const char* who, int expected, const Eigen::VectorXd& v) {
  if (v.size() != expected) {
    throw LengthMismatch(std::string(who) + " expects dimension " +
                         std::to_string(expected) + ", got " +
                         std::to_string(v.size()));
  }
}

Eigen::VectorXd project_simplex(const Eigen::VectorXd& v) {
  // Sort-and-threshold projection onto {x >= 0, sum x = 1}.
  const int d = static_cast<int>(v.size());
  std::vector<double> u(v.data(), v.data() + d);
  std::sort(u.begin(), u.end(), std::greater<double>());
  double running = 0.0;
  double tau = 0.0;
  int support = 0;
  for (int k = 0; k < d; ++k) {
    running += u[k];
    const double candidate = (running - 1.0) / (k + 1);
    if (u[k] - candidate > 0.0) {
      tau = candidate;
      support = k + 1;
    }
  }
  (void)support;
  return (v.array() - tau).max(0.0).matrix();
}

}  // namespace

FeasibleSet FeasibleSet::box(const Eigen::VectorXd& lo, const Eigen::VectorXd& hi) {
  if (lo.size() != hi.size() || lo.size() == 0) {
    throw LengthMismatch("box bounds must be nonempty and of equal length");
  }
  for (int j = 0; j < lo.size(); ++j) {
    if (!(lo[j] < hi[j])) {
      throw ValidationError("box requires lo < hi in every coordinate, failed at " +
                            std::to_string(j));
    }
  }
  FeasibleSet s;
  s.kind = SetKind::Box;
  s.dim = static_cast<int>(lo.size());
  s.lo = lo;
  s.hi = hi;
  return s;
}

FeasibleSet FeasibleSet::box_uniform(int dim, double lo, double hi) {
  return box(Eigen::VectorXd::Constant(dim, lo), Eigen::VectorXd::Constant(dim, hi));
}

FeasibleSet FeasibleSet::simplex(int dim) {
  if (dim < 2) {
    throw ValidationError("simplex needs dimension >= 2");
  }
  FeasibleSet s;
  s.kind = SetKind::Simplex;
  s.dim = dim;
  return s;
}

double FeasibleSet::radius() const {
  if (kind == SetKind::Simplex) return 1.0;
  return lo.cwiseAbs().cwiseMax(hi.cwiseAbs()).norm();
}

Eigen::VectorXd FeasibleSet::project(const Eigen::VectorXd& v) const {
  check_dim("project", dim, v);
  if (!v.allFinite()) throw NonFiniteInput("project received a non-finite vector");
  if (kind == SetKind::Box) return v.cwiseMax(lo).cwiseMin(hi);
  return project_simplex(v);
}

bool FeasibleSet::contains(const Eigen::VectorXd& v, double tol) const {
  check_dim("contains", dim, v);
  if (kind == SetKind::Box) {
    return (v.array() >= lo.array() - tol).all() && (v.array() <= hi.array() + tol).all();
  }
  return v.minCoeff() >= -tol && std::abs(v.sum() - 1.0) <= tol;
}

Eigen::VectorXd FeasibleSet::sample(Rng& rng) const {
  Eigen::VectorXd v(dim);
  if (kind == SetKind::Box) {
    for (int j = 0; j < dim; ++j) v[j] = rng.uniform(lo[j], hi[j]);
    return v;
  }
  double total = 0.0;
  for (int j = 0; j < dim; ++j) {
    v[j] = rng.exponential();
    total += v[j];
  }
  return v / total;
}

Eigen::VectorXd FeasibleSet::center() const {
  if (kind == SetKind::Box) return 0.5 * (lo + hi);
  return Eigen::VectorXd::Constant(dim, 1.0 / dim);
}

BregmanGeometry BregmanGeometry::euclidean(int dim) {
  return BregmanGeometry{GeometryKind::Euclidean, dim, 1.0, 0.0};
}

BregmanGeometry BregmanGeometry::negative_entropy(int dim) {
  return BregmanGeometry{GeometryKind::NegativeEntropy, dim, 1.0, 0.0};
}

double divergence(const BregmanGeometry& geom, const Eigen::VectorXd& xi,
                  const Eigen::VectorXd& zeta) {
  check_dim("divergence", geom.dim, xi);
  check_dim("divergence", geom.dim, zeta);
  if (geom.kind == GeometryKind::Euclidean) {
    return 0.5 * (xi - zeta).squaredNorm();
  }
  double acc = 0.0;
  for (int j = 0; j < geom.dim; ++j) {
    if (xi[j] < 0.0) {
      throw DomainError("entropy divergence needs xi >= 0, got " + std::to_string(xi[j]));
    }
    if (zeta[j] <= 0.0) {
      throw DomainError("entropy divergence needs zeta > 0, got " + std::to_string(zeta[j]));
    }
    if (xi[j] > 0.0) acc += xi[j] * (std::log(xi[j]) - std::log(zeta[j])) - xi[j];
    acc += zeta[j];
  }
  return acc;
}

Eigen::VectorXd mirror_step(const BregmanGeometry& geom, const FeasibleSet& set,
                            const Eigen::VectorXd& center,
                            const Eigen::VectorXd& linear_term, double alpha) {
  if (geom.dim != set.dim) {
    throw LengthMismatch("geometry dimension " + std::to_string(geom.dim) +
                         " does not match set dimension " + std::to_string(set.dim));
  }
  check_dim("mirror_step", geom.dim, center);
  check_dim("mirror_step", geom.dim, linear_term);
  if (!center.allFinite() || !linear_term.allFinite() || !std::isfinite(alpha)) {
    throw NonFiniteInput("mirror_step received non-finite data");
  }

  if (geom.kind == GeometryKind::Euclidean && set.kind == SetKind::Box) {
    return (center - alpha * linear_term).cwiseMax(set.lo).cwiseMin(set.hi);
  }
  if (geom.kind == GeometryKind::NegativeEntropy && set.kind == SetKind::Simplex) {
    Eigen::VectorXd w(geom.dim);
    for (int j = 0; j < geom.dim; ++j) {
      w[j] = std::max(center[j], kEntropyFloor) * std::exp(-alpha * linear_term[j]);
    }
    const double total = w.sum();
    if (!(total > 0.0) || !std::isfinite(total)) {
      throw NumericalFailure("entropy mirror step degenerated; weight mass " +
                             std::to_string(total));
    }
    return w / total;
  }
  throw GeometrySetMismatch("unsupported geometry/set pairing");
}

double triangle_identity_residual(const BregmanGeometry& geom,
                                  const Eigen::VectorXd& xi,
                                  const Eigen::VectorXd& zeta,
                                  const Eigen::VectorXd& theta) {
  Eigen::VectorXd grad_gap(geom.dim);
  if (geom.kind == GeometryKind::Euclidean) {
    grad_gap = zeta - theta;
  } else {
    check_dim("triangle_identity_residual", geom.dim, zeta);
    check_dim("triangle_identity_residual", geom.dim, theta);
    for (int j = 0; j < geom.dim; ++j) {
      if (zeta[j] <= 0.0 || theta[j] <= 0.0) {
        throw DomainError("entropy gradient needs strictly positive points");
      }
      grad_gap[j] = std::log(zeta[j]) - std::log(theta[j]);
    }
  }
  const double lhs = (xi - zeta).dot(grad_gap);
  const double rhs = divergence(geom, xi, theta) - divergence(geom, xi, zeta) -
                     divergence(geom, zeta, theta);
  return std::abs(lhs - rhs);
}

double lipschitz_K(const BregmanGeometry& geom, const FeasibleSet& set,
                   int samples, std::uint64_t seed) {
  if (geom.kind == GeometryKind::Euclidean) {
    if (set.kind != SetKind::Box) throw GeometrySetMismatch("unsupported geometry/set pairing");
    return (set.hi - set.lo).norm();
  }
  if (set.kind != SetKind::Simplex) throw GeometrySetMismatch("unsupported geometry/set pairing");
  Rng rng(seed);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Eigen::VectorXd a = set.sample(rng);
    const Eigen::VectorXd b = set.sample(rng);
    const Eigen::VectorXd z = set.sample(rng);
    const double gap = (a - b).norm();
    if (gap < 1e-9) continue;
    const double ratio =
        std::abs(divergence(geom, a, z) - divergence(geom, b, z)) / gap;
    worst = std::max(worst, ratio);
  }
  return 2.0 * worst;
}

}  // namespace gneseek
