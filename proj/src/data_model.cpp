#include "sewerflow/data_model.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "sewerflow/error.hpp"

namespace sewerflow {

namespace {

constexpr std::array<int, 12> kDaysInMonth = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, long row, const char* column) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("malformed number '" + std::string(s) + "'", row, column);
  return value;
}

double parse_measurement(std::string_view s, long row, const char* column) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("malformed number '" + std::string(s) + "'", row, column);
  if (!std::isfinite(value) || value < 0.0)
    throw ParseError("measurement must be finite and nonnegative, got '" + std::string(s) + "'",
                     row, column);
  return value;
}

void append_double(std::string& out, double v) {
  std::array<char, 32> buf;
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  out.append(buf.data(), ptr);
}

}  // namespace

int day_of_year(int month, int day) {
  int doy = day - 1;
  for (int m = 1; m < month; ++m) doy += kDaysInMonth[m - 1];
  return doy;
}

bool valid_month_day(int month, int day) {
  return month >= 1 && month <= 12 && day >= 1 && day <= kDaysInMonth[month - 1];
}

long grid_index(const SensorReading& r) {
  return static_cast<long>(day_of_year(r.month, r.day)) * kStepsPerDay +
         r.minute_of_day / kStepMinutes;
}

std::vector<SensorReading> parse_csv(std::istream& in) {
  std::vector<SensorReading> readings;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty input: missing header");
  if (trim(line) != kCsvHeader)
    throw ParseError("bad header, expected '" + std::string(kCsvHeader) + "'", 0);

  long row = 0;
  while (std::getline(in, line)) {
    ++row;
    std::string_view sv = trim(line);
    if (sv.empty()) continue;

    std::array<std::string_view, 6> fields;
    std::size_t n_fields = 0;
    while (true) {
      auto comma = sv.find(',');
      std::string_view field = sv.substr(0, comma);
      if (n_fields >= fields.size())
        throw ParseError("expected 6 fields", row);
      fields[n_fields++] = trim(field);
      if (comma == std::string_view::npos) break;
      sv.remove_prefix(comma + 1);
    }
    if (n_fields != fields.size()) throw ParseError("expected 6 fields", row);

    SensorReading r;

    auto slash = fields[0].find('/');
    if (slash == std::string_view::npos) throw ParseError("day must be month/day", row, "day");
    r.month = parse_int(fields[0].substr(0, slash), row, "day");
    r.day = parse_int(fields[0].substr(slash + 1), row, "day");
    if (!valid_month_day(r.month, r.day))
      throw ParseError("invalid calendar day '" + std::string(fields[0]) + "'", row, "day");

    auto colon = fields[1].find(':');
    if (colon == std::string_view::npos) throw ParseError("hour must be H:MM", row, "hour");
    int hour = parse_int(fields[1].substr(0, colon), row, "hour");
    int minute = parse_int(fields[1].substr(colon + 1), row, "hour");
    if (hour < 0 || hour > 23 || minute < 0 || minute > 59)
      throw ParseError("time of day out of range '" + std::string(fields[1]) + "'", row, "hour");
    r.minute_of_day = hour * 60 + minute;
    if (r.minute_of_day % kStepMinutes != 0)
      throw ParseError("time not on 5-minute grid '" + std::string(fields[1]) + "'", row, "hour");

    r.flow = parse_measurement(fields[2], row, "instantaneous_flow");
    r.level = parse_measurement(fields[3], row, "liquid_level");
    r.rate = parse_measurement(fields[4], row, "flow_rate");

    if (fields[5] == "/" || fields[5].empty()) {
      r.label = Label::unlabeled;
    } else if (fields[5] == "abnormal") {
      r.label = Label::abnormal;
    } else {
      throw ParseError("unknown label token '" + std::string(fields[5]) + "'", row, "label");
    }

    readings.push_back(r);
  }
  return readings;
}

std::vector<SensorReading> parse_csv(const std::string& text) {
  std::istringstream in(text);
  return parse_csv(in);
}

std::vector<SensorReading> read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open data file '" + path + "'");
  return parse_csv(in);
}

void write_csv(std::ostream& out, const std::vector<SensorReading>& readings) {
  out << kCsvHeader << '\n';
  std::string line;
  for (const SensorReading& r : readings) {
    line.clear();
    line += std::to_string(r.month);
    line += '/';
    line += std::to_string(r.day);
    line += ',';
    line += std::to_string(r.minute_of_day / 60);
    line += ':';
    int minute = r.minute_of_day % 60;
    if (minute < 10) line += '0';
    line += std::to_string(minute);
    line += ',';
    append_double(line, r.flow);
    line += ',';
    append_double(line, r.level);
    line += ',';
    append_double(line, r.rate);
    line += ',';
    line += (r.label == Label::abnormal) ? "abnormal" : "/";
    line += '\n';
    out << line;
  }
}

std::string to_csv(const std::vector<SensorReading>& readings) {
  std::ostringstream out;
  write_csv(out, readings);
  return out.str();
}

void write_csv_file(const std::string& path, const std::vector<SensorReading>& readings) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open output file '" + path + "'");
  write_csv(out, readings);
}

std::vector<SeriesSegment> segment_series(const std::vector<SensorReading>& readings,
                                          const std::string& source_id) {
  std::vector<SeriesSegment> segments;
  for (std::size_t i = 0; i < readings.size(); ++i) {
    bool fresh = segments.empty() ||
                 grid_index(readings[i]) - grid_index(segments.back().readings.back()) != 1;
    if (fresh) segments.push_back(SeriesSegment{source_id, {}});
    segments.back().readings.push_back(readings[i]);
  }
  return segments;
}

}  // namespace sewerflow
