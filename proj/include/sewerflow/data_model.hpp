#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sewerflow/types.hpp"

namespace sewerflow {

/// Header every data file starts with.
inline constexpr const char* kCsvHeader = "day,hour,instantaneous_flow,liquid_level,flow_rate,label";

/// Parses the flowmeter CSV format. One SensorReading per data row, row
/// order preserved. Label column "/" or empty maps to unlabeled,
/// "abnormal" maps to abnormal. Throws ParseError naming the row and
/// column on malformed numbers, unknown label tokens, or times off the
/// 5-minute grid.
std::vector<SensorReading> parse_csv(std::istream& in);
std::vector<SensorReading> parse_csv(const std::string& text);
std::vector<SensorReading> read_csv_file(const std::string& path);

/// Writes readings back in the same format. parse(write(parse(text)))
/// is identical to parse(text).
void write_csv(std::ostream& out, const std::vector<SensorReading>& readings);
std::string to_csv(const std::vector<SensorReading>& readings);
void write_csv_file(const std::string& path, const std::vector<SensorReading>& readings);

/// Splits a (day, time)-sorted reading list into maximal runs of exactly
/// 5-minute spacing. Any larger or negative time step starts a new
/// segment; concatenating the segments restores the input.
std::vector<SeriesSegment> segment_series(const std::vector<SensorReading>& readings,
                                          const std::string& source_id = "");

}  // namespace sewerflow
