#include "sewerflow/ensemble.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "sewerflow/error.hpp"
#include "sewerflow/rng.hpp"

namespace sewerflow {

namespace {

// Stream ids for per-member seed derivation.
enum : std::uint64_t { kOcSvmStream = 1, kIForestStream = 2, kLofStream = 3 };

Eigen::MatrixXd random_subset(const Eigen::MatrixXd& samples, double fraction,
                              std::uint64_t seed) {
  const Eigen::Index n = samples.rows();
  Eigen::Index m = static_cast<Eigen::Index>(fraction * static_cast<double>(n));
  m = std::clamp<Eigen::Index>(m, 1, n);

  std::vector<Eigen::Index> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  auto rng = make_engine(seed);
  for (Eigen::Index k = 0; k < m; ++k) {
    std::uniform_int_distribution<Eigen::Index> pick(k, n - 1);
    std::swap(pool[static_cast<std::size_t>(k)], pool[static_cast<std::size_t>(pick(rng))]);
  }
  Eigen::MatrixXd subset(m, samples.cols());
  for (Eigen::Index k = 0; k < m; ++k) subset.row(k) = samples.row(pool[static_cast<std::size_t>(k)]);
  return subset;
}

}  // namespace

Verdict bag_intersection(std::span<const Verdict> verdicts) {
  if (verdicts.empty()) throw ConfigError("bag_intersection needs at least one verdict");
  for (Verdict v : verdicts)
    if (v != Verdict::abnormal) return Verdict::normal;
  return Verdict::abnormal;
}

EnsembleModel fit_ensemble(const Eigen::MatrixXd& samples, const EnsembleConfig& cfg,
                           ScalingParams scaling) {
  if (samples.rows() < 2) throw ConfigError("ensemble needs at least two training samples");
  if (!(cfg.subset_fraction > 0.0 && cfg.subset_fraction <= 1.0))
    throw ConfigError("subset_fraction must lie in (0, 1]");

  KernelSpec kernel = cfg.kernel;
  if (kernel.kind == KernelSpec::Kind::rbf && kernel.gamma <= 0.0)
    kernel = KernelSpec::rbf_for_dim(samples.cols());

  EnsembleModel model;
  model.iforest_threshold = cfg.iforest.score_threshold;
  model.lof_threshold = cfg.lof.factor_threshold;

  {
    Eigen::MatrixXd subset =
        random_subset(samples, cfg.subset_fraction, derive_seed(cfg.seed, kOcSvmStream));
    model.ocsvm = fit_ocsvm(subset, cfg.ocsvm, kernel, scaling);
  }
  {
    Eigen::MatrixXd subset =
        random_subset(samples, cfg.subset_fraction, derive_seed(cfg.seed, kIForestStream));
    IForestConfig member_cfg = cfg.iforest;
    member_cfg.seed = derive_seed(cfg.seed, kIForestStream);
    model.iforest = fit_iforest(subset, member_cfg, scaling);
  }
  {
    Eigen::MatrixXd subset =
        random_subset(samples, cfg.subset_fraction, derive_seed(cfg.seed, kLofStream));
    LofConfig member_cfg = cfg.lof;
    member_cfg.k = std::min<int>(member_cfg.k, static_cast<int>(subset.rows()) - 1);
    model.lof = fit_lof(subset, member_cfg, scaling);
  }
  return model;
}

MemberVerdicts ensemble_decide_members(const EnsembleModel& model, const Eigen::VectorXd& x) {
  MemberVerdicts v;
  v.ocsvm = ocsvm_decide(model.ocsvm, x);
  v.iforest = iforest_decide(model.iforest, x, model.iforest_threshold);
  v.lof = lof_decide(model.lof, x, model.lof_threshold);
  const Verdict all[] = {v.ocsvm, v.iforest, v.lof};
  v.combined = bag_intersection(all);
  return v;
}

Verdict ensemble_decide(const EnsembleModel& model, const Eigen::VectorXd& x) {
  return ensemble_decide_members(model, x).combined;
}

}  // namespace sewerflow
