#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "sewerflow/scaling.hpp"
#include "sewerflow/types.hpp"

namespace sewerflow {

struct IForestConfig {
  int n_trees = 100;
  int subsample_size = 256;  // psi, capped at the training size
  std::uint64_t seed = 0;
  double score_threshold = 0.5;  // in (0, 1)
};

/// Node of an isolation tree, stored flat. Internal nodes carry the split;
/// leaves carry the contained-sample count and their depth.
struct IForestNode {
  int split_dim = -1;  // -1 marks a leaf
  double split_value = 0.0;
  int left = -1;
  int right = -1;
  int count = 0;
  int depth = 0;

  bool is_leaf() const { return split_dim < 0; }
};

struct IsolationTree {
  std::vector<IForestNode> nodes;  // nodes[0] is the root
};

struct IForestModel {
  std::vector<IsolationTree> trees;
  int subsample_size = 0;  // psi actually used
  ScalingParams scaling;
};

/// Average path length of an unsuccessful BST search over m points:
/// c(m) = 2 H(m-1) - 2(m-1)/m with H(i) = ln(i) + Euler-Mascheroni,
/// c(1) = c(0) = 0. Normalizes path lengths and pads leaf depths.
double average_path_length(int m);

/// Grows n_trees trees, each on a uniform random subsample of
/// min(psi, n) points. Splits pick a uniformly random dimension among
/// those with spread in the node and a uniform value between that
/// dimension's min and max. Growth stops at height ceil(log2 psi), at
/// single-point nodes, and at nodes whose points are all identical.
/// Deterministic given cfg.seed.
IForestModel fit_iforest(const Eigen::MatrixXd& samples, const IForestConfig& cfg,
                         ScalingParams scaling = {});

/// Anomaly score s(x) = 2^(-E[h(x)] / c(psi)) in (0, 1]; h is the leaf
/// depth padded by c(leaf count), averaged over trees.
double iforest_score(const IForestModel& model, const Eigen::VectorXd& x);

/// Abnormal iff s(x) > threshold.
Verdict iforest_decide(const IForestModel& model, const Eigen::VectorXd& x, double threshold);

}  // namespace sewerflow
