#include "sewerflow/metrics.hpp"

#include <stdexcept>

namespace sewerflow {

double f1_score(double precision, double recall) {
  const double denom = precision + recall;
  if (denom <= 0.0) return 0.0;
  return 2.0 * precision * recall / denom;
}

EvalReport evaluate(std::span<const Verdict> predictions, std::span<const Verdict> labels) {
  if (predictions.empty()) throw std::invalid_argument("evaluate: empty input");
  if (predictions.size() != labels.size())
    throw std::invalid_argument("evaluate: predictions and labels differ in length");

  EvalReport r;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    const bool predicted = predictions[i] == Verdict::abnormal;
    const bool actual = labels[i] == Verdict::abnormal;
    if (predicted && actual)
      ++r.tp;
    else if (predicted && !actual)
      ++r.fp;
    else if (!predicted && actual)
      ++r.fn;
    else
      ++r.tn;
  }
  r.n_abnormal = r.tp + r.fn;
  r.n_normal = r.fp + r.tn;
  r.precision = (r.tp + r.fp) > 0 ? static_cast<double>(r.tp) / static_cast<double>(r.tp + r.fp) : 0.0;
  r.recall = (r.tp + r.fn) > 0 ? static_cast<double>(r.tp) / static_cast<double>(r.tp + r.fn) : 0.0;
  r.f1 = f1_score(r.precision, r.recall);
  return r;
}

}  // namespace sewerflow
