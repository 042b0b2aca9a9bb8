#pragma once

#include <Eigen/Dense>

#include "sewerflow/error.hpp"

namespace sewerflow {

/// Per-dimension standardization learned from a training set and replayable
/// on later data. Zero-variance dimensions pass through untouched. A
/// default-constructed instance is the identity transform.
struct ScalingParams {
  Eigen::ArrayXd mean;
  Eigen::ArrayXd stddev;  // population std; 0 marks a pass-through dimension

  bool identity() const { return mean.size() == 0; }

  Eigen::VectorXd transform(const Eigen::VectorXd& x) const {
    if (identity()) return x;
    if (x.size() != mean.size()) throw ConfigError("feature dimension mismatch in scaling");
    Eigen::ArrayXd a = x.array();
    Eigen::ArrayXd scaled = (stddev > 0.0).select((a - mean) / stddev.max(1e-300), a);
    return scaled.matrix();
  }

  /// Row-wise transform of a sample matrix (one sample per row).
  Eigen::MatrixXd transform(const Eigen::MatrixXd& x) const {
    if (identity()) return x;
    if (x.cols() != mean.size()) throw ConfigError("feature dimension mismatch in scaling");
    Eigen::MatrixXd out(x.rows(), x.cols());
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      if (stddev[j] > 0.0)
        out.col(j) = (x.col(j).array() - mean[j]) / stddev[j];
      else
        out.col(j) = x.col(j);
    }
    return out;
  }
};

/// Learns mean and population standard deviation per column.
inline ScalingParams fit_scaling(const Eigen::MatrixXd& samples) {
  if (samples.rows() == 0) throw ConfigError("cannot fit scaling on an empty sample set");
  ScalingParams p;
  p.mean = samples.colwise().mean().array();
  Eigen::ArrayXd var = (samples.rowwise() - p.mean.matrix().transpose())
                           .array()
                           .square()
                           .colwise()
                           .mean();
  p.stddev = var.sqrt();
  // Dimensions that are numerically constant pass through unchanged.
  p.stddev = (p.stddev > 0.0).select(p.stddev, 0.0);
  p.mean = (p.stddev > 0.0).select(p.mean, 0.0);
  return p;
}

}  // namespace sewerflow
