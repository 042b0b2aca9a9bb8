#include "sewerflow/iforest.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "sewerflow/error.hpp"
#include "sewerflow/rng.hpp"

namespace sewerflow {

namespace {

constexpr double kEulerMascheroni = 0.57721566490153286060;

int height_limit(int psi) {
  int limit = 0;
  while ((1 << limit) < psi) ++limit;  // ceil(log2 psi)
  return limit;
}

class TreeBuilder {
 public:
  TreeBuilder(const Eigen::MatrixXd& x, int limit, std::mt19937_64& rng)
      : x_(x), limit_(limit), rng_(rng) {}

  IsolationTree build(std::vector<int> indices) {
    tree_.nodes.clear();
    grow(std::move(indices), 0);
    return std::move(tree_);
  }

 private:
  int grow(std::vector<int> indices, int depth) {
    const int id = static_cast<int>(tree_.nodes.size());
    tree_.nodes.emplace_back();
    tree_.nodes[id].depth = depth;
    tree_.nodes[id].count = static_cast<int>(indices.size());

    if (depth >= limit_ || indices.size() <= 1) return id;

    // Dimensions with spread inside this node; none means all points
    // are identical and the node stays a leaf.
    const Eigen::Index dim = x_.cols();
    split_dims_.clear();
    for (Eigen::Index d = 0; d < dim; ++d) {
      double lo = x_(indices[0], d), hi = lo;
      for (std::size_t k = 1; k < indices.size(); ++k) {
        const double v = x_(indices[k], d);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      if (hi > lo) split_dims_.push_back({static_cast<int>(d), lo, hi});
    }
    if (split_dims_.empty()) return id;

    const auto& pick =
        split_dims_[std::uniform_int_distribution<std::size_t>(0, split_dims_.size() - 1)(rng_)];
    double value = pick.lo + std::uniform_real_distribution<double>(0.0, 1.0)(rng_) *
                                 (pick.hi - pick.lo);
    // Both children must stay nonempty: lo < value <= hi routes the node
    // minimum left and the maximum right. Rounding can push the draw onto
    // lo; fall back to the midpoint, and give up on adjacent doubles.
    if (!(value > pick.lo && value <= pick.hi)) value = std::midpoint(pick.lo, pick.hi);
    if (!(value > pick.lo && value <= pick.hi)) return id;

    std::vector<int> left, right;
    left.reserve(indices.size());
    right.reserve(indices.size());
    for (int i : indices) (x_(i, pick.dim) < value ? left : right).push_back(i);
    indices.clear();
    indices.shrink_to_fit();

    tree_.nodes[id].split_dim = pick.dim;
    tree_.nodes[id].split_value = value;
    const int left_id = grow(std::move(left), depth + 1);
    tree_.nodes[id].left = left_id;
    const int right_id = grow(std::move(right), depth + 1);
    tree_.nodes[id].right = right_id;
    return id;
  }

  struct SplitDim {
    int dim;
    double lo, hi;
  };

  const Eigen::MatrixXd& x_;
  int limit_;
  std::mt19937_64& rng_;
  IsolationTree tree_;
  std::vector<SplitDim> split_dims_;
};

}  // namespace

double average_path_length(int m) {
  if (m <= 1) return 0.0;
  const double h = std::log(static_cast<double>(m - 1)) + kEulerMascheroni;
  return 2.0 * h - 2.0 * static_cast<double>(m - 1) / static_cast<double>(m);
}

IForestModel fit_iforest(const Eigen::MatrixXd& samples, const IForestConfig& cfg,
                         ScalingParams scaling) {
  const Eigen::Index n = samples.rows();
  if (n < 2) throw ConfigError("isolation forest needs at least two samples");
  if (cfg.n_trees < 1) throw ConfigError("n_trees must be positive");
  if (cfg.subsample_size < 2) throw ConfigError("subsample_size must be at least 2");
  if (!(cfg.score_threshold > 0.0 && cfg.score_threshold < 1.0))
    throw ConfigError("score_threshold must lie in (0, 1)");

  const int psi = static_cast<int>(std::min<Eigen::Index>(cfg.subsample_size, n));
  const int limit = height_limit(psi);

  IForestModel model;
  model.subsample_size = psi;
  model.scaling = std::move(scaling);
  model.trees.reserve(static_cast<std::size_t>(cfg.n_trees));

  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);

  for (int t = 0; t < cfg.n_trees; ++t) {
    auto rng = make_engine(derive_seed(cfg.seed, static_cast<std::uint64_t>(t)));
    // Partial Fisher-Yates: the first psi entries become the subsample.
    for (int k = 0; k < psi; ++k) {
      std::uniform_int_distribution<int> pick(k, static_cast<int>(n) - 1);
      std::swap(pool[static_cast<std::size_t>(k)], pool[static_cast<std::size_t>(pick(rng))]);
    }
    std::vector<int> subsample(pool.begin(), pool.begin() + psi);
    TreeBuilder builder(samples, limit, rng);
    model.trees.push_back(builder.build(std::move(subsample)));
  }
  return model;
}

double iforest_score(const IForestModel& model, const Eigen::VectorXd& x) {
  if (model.trees.empty()) throw ConfigError("isolation forest model is empty");
  const Eigen::VectorXd q = model.scaling.transform(x);

  double total = 0.0;
  for (const IsolationTree& tree : model.trees) {
    const IForestNode* node = &tree.nodes[0];
    while (!node->is_leaf()) {
      if (node->split_dim >= q.size())
        throw ConfigError("feature dimension mismatch in iforest_score");
      node = &tree.nodes[static_cast<std::size_t>(q[node->split_dim] < node->split_value
                                                      ? node->left
                                                      : node->right)];
    }
    total += node->depth + average_path_length(node->count);
  }
  const double expected = total / static_cast<double>(model.trees.size());
  return std::exp2(-expected / average_path_length(model.subsample_size));
}

Verdict iforest_decide(const IForestModel& model, const Eigen::VectorXd& x, double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0)) throw ConfigError("threshold must lie in (0, 1)");
  return iforest_score(model, x) > threshold ? Verdict::abnormal : Verdict::normal;
}

}  // namespace sewerflow
