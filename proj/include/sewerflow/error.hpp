#pragma once

#include <stdexcept>
#include <string>

namespace sewerflow {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input data (CSV rows, JSON documents). Carries the location
/// when one is known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, long row = -1, const std::string& column = "")
      : Error(format(what, row, column)), row_(row), column_(column) {}

  long row() const { return row_; }
  const std::string& column() const { return column_; }

 private:
  static std::string format(const std::string& what, long row, const std::string& column) {
    std::string msg = what;
    if (row >= 0) msg += " (row " + std::to_string(row);
    if (row >= 0 && !column.empty()) msg += ", column " + column;
    if (row >= 0) msg += ")";
    return msg;
  }

  long row_;
  std::string column_;
};

/// Invalid configuration or infeasible request (bad hyperparameters,
/// window config too large for the data, overlapping episodes, ...).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace sewerflow
