#pragma once

#include <Eigen/Dense>

#include "sewerflow/kernel.hpp"
#include "sewerflow/scaling.hpp"
#include "sewerflow/types.hpp"

namespace sewerflow {

struct OcSvmTrainConfig {
  double nu = 0.1;          // fraction bound, in (0, 1]
  double tolerance = 1e-6;  // KKT gap at which the solver stops
  long max_passes = 0;      // pair optimizations budget; 0 means 10 * n
};

/// Fitted one-class SVM. Keeps only the vectors with nonzero dual weight.
/// The stored weights satisfy 0 <= alpha_i <= 1/(nu*n) and sum to 1
/// within the solver tolerance.
struct OcSvmModel {
  Eigen::MatrixXd support_vectors;  // one per row
  Eigen::VectorXd alphas;
  double rho = 0.0;
  KernelSpec kernel;
  ScalingParams scaling;

  Eigen::Index dim() const { return support_vectors.cols(); }
};

/// Solves the one-class dual: minimize (1/2) a^T Q a subject to
/// 0 <= a_i <= 1/(nu*n) and sum(a) = 1, with Q_ij = K(x_i, x_j),
/// by pairwise coordinate optimization on maximal-violating pairs.
/// `samples` holds one feature vector per row, in the space the given
/// scaling maps into (pass scaled rows together with their params, or raw
/// rows with the default identity params).
OcSvmModel fit_ocsvm(const Eigen::MatrixXd& samples, const OcSvmTrainConfig& cfg,
                     const KernelSpec& kernel, ScalingParams scaling = {});

/// g(x) = sum_i alpha_i K(x', x_i) - rho, where x' is x mapped through the
/// model's stored scaling.
double ocsvm_g(const OcSvmModel& model, const Eigen::VectorXd& x);

/// sign(g): g >= 0 is normal, g < 0 abnormal.
Verdict ocsvm_decide(const OcSvmModel& model, const Eigen::VectorXd& x);

}  // namespace sewerflow
