#include "sewerflow/ocsvm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "sewerflow/error.hpp"

namespace sewerflow {

namespace {

/// Kernel rows computed on demand with a small ring cache. The working
/// pair of the solver revisits the same indices often, so even a modest
/// cache removes most row recomputation.
class KernelRowCache {
 public:
  KernelRowCache(const KernelSpec& spec, const Eigen::MatrixXd& x, std::size_t capacity)
      : spec_(spec), x_(x), sq_norms_(x.rowwise().squaredNorm()), slot_of_(x.rows(), -1) {
    rows_.resize(std::min<std::size_t>(capacity, static_cast<std::size_t>(x.rows())));
  }

  const Eigen::VectorXd& row(Eigen::Index i) {
    int slot = slot_of_[i];
    if (slot >= 0) return rows_[static_cast<std::size_t>(slot)].values;
    slot = static_cast<int>(next_);
    next_ = (next_ + 1) % rows_.size();
    Entry& e = rows_[static_cast<std::size_t>(slot)];
    if (e.index >= 0) slot_of_[e.index] = -1;
    e.index = i;
    e.values = kernel_row(spec_, x_, sq_norms_, x_.row(i).transpose());
    slot_of_[i] = slot;
    return e.values;
  }

  double diagonal(Eigen::Index i) const {
    if (spec_.kind == KernelSpec::Kind::linear) return sq_norms_[i];
    return 1.0;
  }

 private:
  struct Entry {
    Eigen::Index index = -1;
    Eigen::VectorXd values;
  };

  const KernelSpec& spec_;
  const Eigen::MatrixXd& x_;
  Eigen::VectorXd sq_norms_;
  std::vector<int> slot_of_;
  std::vector<Entry> rows_;
  std::size_t next_ = 0;
};

}  // namespace

OcSvmModel fit_ocsvm(const Eigen::MatrixXd& samples, const OcSvmTrainConfig& cfg,
                     const KernelSpec& kernel_spec, ScalingParams scaling) {
  const Eigen::Index n = samples.rows();
  if (n < 1) throw ConfigError("one-class SVM needs at least one sample");
  if (!(cfg.nu > 0.0 && cfg.nu <= 1.0)) throw ConfigError("nu must lie in (0, 1]");
  if (cfg.nu * static_cast<double>(n) < 1.0)
    throw ConfigError("infeasible: nu * n < 1 leaves no room for sum(alpha) = 1");
  if (!(cfg.tolerance > 0.0)) throw ConfigError("tolerance must be positive");
  kernel_spec.validate();

  const double box = 1.0 / (cfg.nu * static_cast<double>(n));
  const long max_steps = cfg.max_passes > 0 ? cfg.max_passes : 10 * static_cast<long>(n);

  KernelRowCache cache(kernel_spec, samples, 96);

  // Uniform weights are always feasible since 1/n <= 1/(nu*n).
  Eigen::VectorXd alpha = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  Eigen::VectorXd grad(n);  // grad = Q * alpha
  for (Eigen::Index i = 0; i < n; ++i) grad[i] = cache.row(i).mean();

  for (long step = 0; step < max_steps; ++step) {
    // Maximal violating pair: mass moves from the highest-gradient index
    // that can shrink to the lowest-gradient index that can grow.
    Eigen::Index up = -1, down = -1;
    double g_down = -std::numeric_limits<double>::infinity();
    double g_up = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < n; ++i) {
      if (alpha[i] > 0.0 && grad[i] > g_down) {
        g_down = grad[i];
        down = i;
      }
      if (alpha[i] < box && grad[i] < g_up) {
        g_up = grad[i];
        up = i;
      }
    }
    if (up < 0 || down < 0 || up == down) break;
    const double gap = g_down - g_up;
    if (gap <= cfg.tolerance) break;

    // Copy the first row: fetching the second may evict it from the ring.
    const Eigen::VectorXd row_down = cache.row(down);
    const Eigen::VectorXd& row_up = cache.row(up);
    const double curvature = cache.diagonal(down) + cache.diagonal(up) - 2.0 * row_down[up];
    const double delta_max = std::min(alpha[down], box - alpha[up]);
    double delta = curvature > 0.0 ? std::min(gap / curvature, delta_max) : delta_max;
    if (delta <= 0.0) break;

    alpha[down] -= delta;
    alpha[up] += delta;
    if (alpha[down] < 1e-15) alpha[down] = 0.0;
    if (alpha[up] > box - 1e-15 * box) alpha[up] = box;
    grad += delta * (row_up - row_down);
  }

  // Offset: average gradient over free vectors; with none strictly inside
  // the box, the midpoint of the interval the bound vectors imply.
  double rho;
  double free_sum = 0.0;
  Eigen::Index free_count = 0;
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (alpha[i] > 0.0 && alpha[i] < box) {
      free_sum += grad[i];
      ++free_count;
    } else if (alpha[i] >= box) {
      lo = std::max(lo, grad[i]);
    } else {
      hi = std::min(hi, grad[i]);
    }
  }
  if (free_count > 0) {
    rho = free_sum / static_cast<double>(free_count);
  } else if (std::isinf(hi)) {
    rho = lo;
  } else if (std::isinf(lo)) {
    rho = hi;
  } else {
    rho = 0.5 * (lo + hi);
  }

  OcSvmModel model;
  model.kernel = kernel_spec;
  model.scaling = std::move(scaling);
  model.rho = rho;
  const Eigen::Index n_sv = (alpha.array() > 0.0).count();
  model.support_vectors.resize(n_sv, samples.cols());
  model.alphas.resize(n_sv);
  for (Eigen::Index i = 0, k = 0; i < n; ++i) {
    if (alpha[i] > 0.0) {
      model.support_vectors.row(k) = samples.row(i);
      model.alphas[k] = alpha[i];
      ++k;
    }
  }
  return model;
}

double ocsvm_g(const OcSvmModel& model, const Eigen::VectorXd& x) {
  const Eigen::VectorXd q = model.scaling.transform(x);
  if (q.size() != model.dim()) throw ConfigError("feature dimension mismatch in ocsvm_g");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < model.support_vectors.rows(); ++i)
    sum += model.alphas[i] * kernel(model.kernel, q, model.support_vectors.row(i).transpose());
  return sum - model.rho;
}

Verdict ocsvm_decide(const OcSvmModel& model, const Eigen::VectorXd& x) {
  return ocsvm_g(model, x) >= 0.0 ? Verdict::normal : Verdict::abnormal;
}

}  // namespace sewerflow
