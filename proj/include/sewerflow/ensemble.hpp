#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>

#include "sewerflow/iforest.hpp"
#include "sewerflow/lof.hpp"
#include "sewerflow/ocsvm.hpp"

namespace sewerflow {

struct EnsembleConfig {
  OcSvmTrainConfig ocsvm;
  KernelSpec kernel = KernelSpec::rbf(0.0);  // gamma <= 0 resolves to 1/dim at fit
  IForestConfig iforest;
  LofConfig lof;
  double subset_fraction = 0.8;  // share of training windows each member sees
  std::uint64_t seed = 0;
};

/// The three detectors plus their binarization thresholds, fitted on
/// identically scaled features.
struct EnsembleModel {
  OcSvmModel ocsvm;
  IForestModel iforest;
  double iforest_threshold = 0.5;
  LofModel lof;
  double lof_threshold = 1.5;

  Eigen::Index dim() const { return ocsvm.dim(); }
};

/// Per-member verdicts next to the combined one, for reporting.
struct MemberVerdicts {
  Verdict ocsvm = Verdict::normal;
  Verdict iforest = Verdict::normal;
  Verdict lof = Verdict::normal;
  Verdict combined = Verdict::normal;
};

/// Intersection vote: abnormal only when every verdict is abnormal.
/// Errors on an empty list.
Verdict bag_intersection(std::span<const Verdict> verdicts);

/// Trains each member on an independent uniform random subset of the rows
/// (cfg.subset_fraction of them) with per-member seeds derived from
/// cfg.seed. `samples` and `scaling` follow the fit_ocsvm convention:
/// rows already live in the scaled space the params map into.
EnsembleModel fit_ensemble(const Eigen::MatrixXd& samples, const EnsembleConfig& cfg,
                           ScalingParams scaling = {});

MemberVerdicts ensemble_decide_members(const EnsembleModel& model, const Eigen::VectorXd& x);
Verdict ensemble_decide(const EnsembleModel& model, const Eigen::VectorXd& x);

}  // namespace sewerflow
