#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <functional>

#include "opsplit/errors.hpp"

namespace opsplit {

// Matrix-free linear operator: the forward action y = Mx and the adjoint
// action y = M*x. Dense materialization is available up to kDenseCap so
// block solvers can slice explicit submatrices.
struct LinearMap {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> apply;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> adjoint_apply;

  static constexpr Eigen::Index kDenseCap = 2000;

  static LinearMap identity(Eigen::Index n);
  static LinearMap scaled_identity(Eigen::Index n, double s);
  static LinearMap from_dense(Eigen::MatrixXd a);

  Eigen::VectorXd operator()(const Eigen::VectorXd& x) const { return apply(x); }

  // Applies the map to the canonical basis. Guarded by kDenseCap.
  Eigen::MatrixXd materialize() const;
};

struct AdjointCheckResult {
  bool consistent = false;
  double max_discrepancy = 0.0;
};

// Samples `trials` random pairs (x, y) and compares <Mx, y> against
// <x, M*y> with the relative discrepancy |<Mx,y> - <x,M*y>| / (1 + |<Mx,y>|).
// Consistent iff the max discrepancy stays below 1e-10.
AdjointCheckResult adjoint_check(const LinearMap& map, int trials, std::uint64_t seed);

// Power iteration on M*M. Returns an estimate of the squared spectral norm
// ||M||^2, nondecreasing in the iteration count; a zero map yields 0.
double operator_norm_sq(const LinearMap& map, int iterations);

}  // namespace opsplit
