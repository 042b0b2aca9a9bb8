#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "sewerflow/error.hpp"

namespace sewerflow {

/// Kernel choice for the one-class SVM. gamma applies to the rbf kernel
/// only: K(x, y) = exp(-gamma * |x - y|^2).
struct KernelSpec {
  enum class Kind { linear, rbf };

  Kind kind = Kind::rbf;
  double gamma = 1.0;

  static KernelSpec linear() { return {Kind::linear, 0.0}; }
  static KernelSpec rbf(double gamma) { return {Kind::rbf, gamma}; }

  /// Default gamma when the feature dimension is known: 1/d.
  static KernelSpec rbf_for_dim(Eigen::Index dim) {
    return rbf(1.0 / static_cast<double>(dim > 0 ? dim : 1));
  }

  void validate() const {
    if (kind == Kind::rbf && !(gamma > 0.0)) throw ConfigError("rbf kernel requires gamma > 0");
  }
};

/// K(x, y) for two feature vectors.
template <typename DerivedA, typename DerivedB>
double kernel(const KernelSpec& spec, const Eigen::MatrixBase<DerivedA>& x,
              const Eigen::MatrixBase<DerivedB>& y) {
  if (spec.kind == KernelSpec::Kind::linear) return x.dot(y);
  return std::exp(-spec.gamma * (x - y).squaredNorm());
}

/// One row of the kernel matrix: K(x, row_i) for every row of `rows`.
/// `row_sq_norms` must hold the squared norms of the rows (ignored for the
/// linear kernel); passing it in keeps repeated evaluations cheap.
template <typename Derived>
Eigen::VectorXd kernel_row(const KernelSpec& spec, const Eigen::MatrixXd& rows,
                           const Eigen::VectorXd& row_sq_norms,
                           const Eigen::MatrixBase<Derived>& x) {
  Eigen::VectorXd dots = rows * x;
  if (spec.kind == KernelSpec::Kind::linear) return dots;
  Eigen::ArrayXd sq_dist =
      (row_sq_norms.array() - 2.0 * dots.array() + x.squaredNorm()).max(0.0);
  return (-spec.gamma * sq_dist).exp().matrix();
}

}  // namespace sewerflow
