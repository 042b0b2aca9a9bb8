#pragma once

#include <Eigen/Dense>

#include "sewerflow/scaling.hpp"
#include "sewerflow/types.hpp"

namespace sewerflow {

struct LofConfig {
  int k = 20;  // neighbor count, capped at n-1 by callers that size it
  double factor_threshold = 1.5;
};

/// Fitted local-outlier-factor reference structure. Queries are scored
/// against these references (novelty style) and never join them.
/// lrd entries are positive, with +infinity as the infinite-density
/// sentinel for all-duplicate neighborhoods.
struct LofModel {
  Eigen::MatrixXd reference_points;  // one per row
  int k = 0;
  Eigen::VectorXd k_distances;
  Eigen::VectorXd lrds;
  ScalingParams scaling;

  Eigen::Index dim() const { return reference_points.cols(); }
};

/// Caches, for every sample, its k-distance (to its k-th nearest other
/// sample) and local reachable density
/// lrd = |N| / sum_{o in N} max(k-distance(o), dist(p, o)),
/// where N holds every other sample within the k-distance (ties included).
/// Euclidean distance throughout. Requires n >= k+1.
LofModel fit_lof(const Eigen::MatrixXd& samples, const LofConfig& cfg, ScalingParams scaling = {});

/// LOF(x): mean over x's k-nearest references of lrd(neighbor) / lrd(x),
/// with lrd(x) computed against the references and the infinite-density
/// ratio inf/inf defined as 1.
double lof_factor(const LofModel& model, const Eigen::VectorXd& x);

/// Abnormal iff LOF(x) > threshold.
Verdict lof_decide(const LofModel& model, const Eigen::VectorXd& x, double threshold);

}  // namespace sewerflow
