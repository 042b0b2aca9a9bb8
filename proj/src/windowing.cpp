#include "sewerflow/windowing.hpp"

#include <array>
#include <charconv>
#include <ostream>

#include "sewerflow/error.hpp"

namespace sewerflow {

std::vector<WindowSample> build_windows(const SeriesSegment& segment, const WindowConfig& cfg) {
  if (cfg.n_history < 1 || cfg.p_future < 1)
    throw ConfigError("window lengths must be positive");

  const auto& r = segment.readings;
  const long n = cfg.n_history;
  const long p = cfg.p_future;
  const long count = static_cast<long>(r.size()) - n - p + 1;

  std::vector<WindowSample> samples;
  if (count <= 0) return samples;
  samples.reserve(static_cast<std::size_t>(count));

  for (long i = 0; i < count; ++i) {
    WindowSample s;
    s.features.resize(kChannels * n);
    for (long t = 0; t < n; ++t) {
      const SensorReading& step = r[static_cast<std::size_t>(i + t)];
      s.features[kChannels * t + 0] = step.flow;
      s.features[kChannels * t + 1] = step.level;
      s.features[kChannels * t + 2] = step.rate;
    }
    s.label = Verdict::normal;
    for (long t = 0; t < p; ++t) {
      if (r[static_cast<std::size_t>(i + n + t)].label == Label::abnormal) {
        s.label = Verdict::abnormal;
        break;
      }
    }
    const SensorReading& first_future = r[static_cast<std::size_t>(i + n)];
    s.anchor = Anchor{segment.source_id, first_future.month, first_future.day,
                      first_future.minute_of_day};
    samples.push_back(std::move(s));
  }
  return samples;
}

std::vector<WindowSample> build_windows(const std::vector<SeriesSegment>& segments,
                                        const WindowConfig& cfg) {
  std::vector<WindowSample> all;
  for (const SeriesSegment& segment : segments) {
    auto part = build_windows(segment, cfg);
    all.insert(all.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return all;
}

Eigen::MatrixXd feature_matrix(std::span<const WindowSample> samples) {
  if (samples.empty()) return {};
  Eigen::MatrixXd x(static_cast<Eigen::Index>(samples.size()), samples[0].features.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].features.size() != x.cols())
      throw ConfigError("inconsistent feature dimensions across samples");
    x.row(static_cast<Eigen::Index>(i)) = samples[i].features;
  }
  return x;
}

std::vector<Verdict> labels_of(std::span<const WindowSample> samples) {
  std::vector<Verdict> labels;
  labels.reserve(samples.size());
  for (const WindowSample& s : samples) labels.push_back(s.label);
  return labels;
}

std::pair<std::vector<WindowSample>, ScalingParams> scale_features(
    std::span<const WindowSample> samples) {
  if (samples.empty()) throw ConfigError("cannot scale an empty sample list");
  ScalingParams params = fit_scaling(feature_matrix(samples));
  return {apply_scaling(samples, params), params};
}

std::vector<WindowSample> apply_scaling(std::span<const WindowSample> samples,
                                        const ScalingParams& params) {
  std::vector<WindowSample> out(samples.begin(), samples.end());
  for (WindowSample& s : out) s.features = params.transform(s.features);
  return out;
}

void write_windows_csv(std::ostream& out, std::span<const WindowSample> samples) {
  const Eigen::Index dim = samples.empty() ? 0 : samples[0].features.size();
  for (Eigen::Index j = 0; j < dim; ++j) out << 'f' << j << ',';
  out << "label\n";
  std::array<char, 32> buf;
  for (const WindowSample& s : samples) {
    for (Eigen::Index j = 0; j < s.features.size(); ++j) {
      auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), s.features[j]);
      out.write(buf.data(), ptr - buf.data());
      out << ',';
    }
    out << to_string(s.label) << '\n';
  }
}

}  // namespace sewerflow
