#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "sewerflow/scaling.hpp"
#include "sewerflow/types.hpp"

namespace sewerflow {

/// Dual sliding-window lengths: N history steps form the feature vector,
/// the following P future steps determine the label. The stride is one
/// 5-minute step.
struct WindowConfig {
  int n_history = 5;
  int p_future = 5;
};

/// Number of channels per history step (flow, level, rate).
constexpr int kChannels = 3;

/// Where a sample sits in the source series: the first future step.
struct Anchor {
  std::string source_id;
  int month = 1;
  int day = 1;
  int minute_of_day = 0;
};

/// One windowed sample: 3*N features (per history step: flow, level, rate,
/// oldest to newest) and a label that is abnormal iff any of the P future
/// readings is labeled abnormal.
struct WindowSample {
  Eigen::VectorXd features;
  Verdict label = Verdict::normal;
  Anchor anchor;
};

/// Slides both windows over one gap-free segment. Yields
/// max(0, L - N - P + 1) samples for a segment of length L.
std::vector<WindowSample> build_windows(const SeriesSegment& segment, const WindowConfig& cfg);

/// build_windows over every segment, concatenated in order.
std::vector<WindowSample> build_windows(const std::vector<SeriesSegment>& segments,
                                        const WindowConfig& cfg);

/// Stacks sample features into a matrix, one sample per row.
Eigen::MatrixXd feature_matrix(std::span<const WindowSample> samples);

std::vector<Verdict> labels_of(std::span<const WindowSample> samples);

/// Standardizes every feature dimension over the sample list and returns
/// the fitted parameters so the identical transform can be replayed on
/// later data. Zero-variance dimensions are left untouched.
std::pair<std::vector<WindowSample>, ScalingParams> scale_features(
    std::span<const WindowSample> samples);

/// Replays a saved transform.
std::vector<WindowSample> apply_scaling(std::span<const WindowSample> samples,
                                        const ScalingParams& params);

/// Writes a windowed dataset as CSV: f0,...,f{3N-1},label.
void write_windows_csv(std::ostream& out, std::span<const WindowSample> samples);

}  // namespace sewerflow
