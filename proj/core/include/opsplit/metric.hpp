#pragma once

#include <Eigen/Core>

#include <memory>

#include "opsplit/errors.hpp"

namespace opsplit {

enum class MetricKind { Scalar, Diagonal, Dense };

// Symmetric positive-definite operator V with forward, inverse and
// square-root actions plus exact eigenvalue bounds. Value type: scalar and
// diagonal metrics carry their data inline, dense metrics share an
// eigendecomposition.
class SpdMetric {
 public:
  static SpdMetric scaled_identity(Eigen::Index dim, double value);
  static SpdMetric diagonal(Eigen::VectorXd d);
  static SpdMetric dense(const Eigen::MatrixXd& v);

  MetricKind kind() const { return kind_; }
  Eigen::Index dim() const { return dim_; }
  bool is_scalar() const { return kind_ == MetricKind::Scalar; }
  double scalar_value() const;

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
  Eigen::VectorXd inv_apply(const Eigen::VectorXd& x) const;
  Eigen::VectorXd sqrt_apply(const Eigen::VectorXd& x) const;

  // <Vx, x>; the squared V-norm of x.
  double quad(const Eigen::VectorXd& x) const;

  double eig_lower() const { return eig_lower_; }
  double eig_upper() const { return eig_upper_; }

  // The metric of V^{-1}, used to measure distances in inverse metrics.
  SpdMetric inverse() const;

 private:
  struct DenseData {
    Eigen::MatrixXd u;       // eigenvectors
    Eigen::VectorXd evals;   // eigenvalues, all > 0
  };

  SpdMetric() = default;
  void check_dim(const Eigen::VectorXd& x) const;

  MetricKind kind_ = MetricKind::Scalar;
  Eigen::Index dim_ = 0;
  double scalar_ = 1.0;
  Eigen::VectorXd diag_;
  std::shared_ptr<const DenseData> dense_;
  double eig_lower_ = 1.0;
  double eig_upper_ = 1.0;
};

}  // namespace opsplit
