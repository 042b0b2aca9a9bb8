#pragma once

#include <span>

#include "sewerflow/types.hpp"

namespace sewerflow {

/// Confusion matrix and derived scores with abnormal as the positive
/// class. Zero-denominator conventions: precision, recall, and F1 are 0
/// when their denominators vanish.
struct EvalReport {
  long tp = 0;
  long fp = 0;
  long fn = 0;
  long tn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  long n_abnormal = 0;  // tp + fn
  long n_normal = 0;    // fp + tn
};

/// Harmonic mean of precision and recall; 0 when both are 0.
double f1_score(double precision, double recall);

/// Tabulates predictions against labels. Errors on empty or
/// length-mismatched input.
EvalReport evaluate(std::span<const Verdict> predictions, std::span<const Verdict> labels);

}  // namespace sewerflow
