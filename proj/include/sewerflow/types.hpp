#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sewerflow {

/// Raw reading label as it appears in the data. Readings are either
/// explicitly marked abnormal or carry no mark at all.
enum class Label : std::uint8_t { unlabeled, abnormal };

/// Binary decision emitted by a detector or the ensemble. Abnormal is the
/// positive class everywhere downstream.
enum class Verdict : std::uint8_t { normal, abnormal };

inline const char* to_string(Verdict v) { return v == Verdict::abnormal ? "abnormal" : "normal"; }

/// One 5-minute flowmeter record. `minute_of_day` is minutes since
/// midnight, always on the 5-minute grid. The calendar day is month/day
/// with no year; ordering assumes a single non-leap year.
struct SensorReading {
  int month = 1;
  int day = 1;
  int minute_of_day = 0;
  double flow = 0.0;   // instantaneous flow, m^3/h
  double level = 0.0;  // liquid level, m
  double rate = 0.0;   // flow rate, m/s
  Label label = Label::unlabeled;

  bool operator==(const SensorReading&) const = default;
};

constexpr int kStepMinutes = 5;
constexpr int kStepsPerDay = 24 * 60 / kStepMinutes;

/// Absolute position of a reading on the 5-minute grid of a non-leap year,
/// used for ordering and gap detection.
long grid_index(const SensorReading& r);

/// Day-of-year (0-based) for a month/day pair in a non-leap year.
int day_of_year(int month, int day);

bool valid_month_day(int month, int day);

/// A maximal run of readings spaced exactly 5 minutes apart.
struct SeriesSegment {
  std::string source_id;
  std::vector<SensorReading> readings;
};

}  // namespace sewerflow
