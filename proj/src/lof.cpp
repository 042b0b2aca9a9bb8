#include "sewerflow/lof.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "sewerflow/error.hpp"

namespace sewerflow {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// k-th smallest of `dists` and the indices within that radius
/// (tie-inclusive neighborhood).
void neighborhood(const Eigen::VectorXd& dists, int k, double* k_distance,
                  std::vector<Eigen::Index>* members) {
  std::vector<double> sorted(dists.data(), dists.data() + dists.size());
  std::nth_element(sorted.begin(), sorted.begin() + (k - 1), sorted.end());
  *k_distance = sorted[static_cast<std::size_t>(k - 1)];
  members->clear();
  for (Eigen::Index j = 0; j < dists.size(); ++j)
    if (dists[j] <= *k_distance) members->push_back(j);
}

double local_reachable_density(const Eigen::VectorXd& dists, const Eigen::VectorXd& k_distances,
                               const std::vector<Eigen::Index>& members) {
  double reach_sum = 0.0;
  for (Eigen::Index j : members) reach_sum += std::max(k_distances[j], dists[j]);
  if (reach_sum <= 0.0) return kInf;
  return static_cast<double>(members.size()) / reach_sum;
}

}  // namespace

LofModel fit_lof(const Eigen::MatrixXd& samples, const LofConfig& cfg, ScalingParams scaling) {
  const Eigen::Index n = samples.rows();
  if (cfg.k < 1) throw ConfigError("k must be positive");
  if (n <= cfg.k)
    throw ConfigError("local outlier factor needs at least k+1 samples, got " +
                      std::to_string(n) + " with k=" + std::to_string(cfg.k));

  LofModel model;
  model.reference_points = samples;
  model.k = cfg.k;
  model.scaling = std::move(scaling);
  model.k_distances.resize(n);
  model.lrds.resize(n);

  // Distances come from explicit differences so duplicate points give an
  // exact zero. Rows are recomputed in the second pass instead of holding
  // the full n x n matrix.
  std::vector<std::vector<Eigen::Index>> all_members(static_cast<std::size_t>(n));
  Eigen::VectorXd row(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    row = (samples.rowwise() - samples.row(i)).rowwise().norm();
    // Push the self entry out of the way: the k-th nearest is always
    // another point.
    row[i] = kInf;
    neighborhood(row, cfg.k, &model.k_distances[i], &all_members[static_cast<std::size_t>(i)]);
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    row = (samples.rowwise() - samples.row(i)).rowwise().norm();
    row[i] = kInf;
    model.lrds[i] =
        local_reachable_density(row, model.k_distances, all_members[static_cast<std::size_t>(i)]);
  }
  return model;
}

double lof_factor(const LofModel& model, const Eigen::VectorXd& x) {
  const Eigen::VectorXd q = model.scaling.transform(x);
  if (q.size() != model.dim()) throw ConfigError("feature dimension mismatch in lof_factor");

  const Eigen::MatrixXd& refs = model.reference_points;
  Eigen::VectorXd dists = (refs.rowwise() - q.transpose()).rowwise().norm();

  double query_k_distance = 0.0;
  std::vector<Eigen::Index> members;
  neighborhood(dists, model.k, &query_k_distance, &members);
  const double query_lrd = local_reachable_density(dists, model.k_distances, members);

  double sum = 0.0;
  for (Eigen::Index j : members) {
    const double neighbor_lrd = model.lrds[j];
    if (std::isinf(neighbor_lrd) && std::isinf(query_lrd))
      sum += 1.0;  // duplicate cluster on both sides
    else
      sum += neighbor_lrd / query_lrd;
  }
  return sum / static_cast<double>(members.size());
}

Verdict lof_decide(const LofModel& model, const Eigen::VectorXd& x, double threshold) {
  if (!(threshold > 0.0)) throw ConfigError("factor threshold must be positive");
  return lof_factor(model, x) > threshold ? Verdict::abnormal : Verdict::normal;
}

}  // namespace sewerflow
