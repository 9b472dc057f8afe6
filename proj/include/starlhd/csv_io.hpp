#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ios>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "starlhd/design_array.hpp"
#include "starlhd/lhd.hpp"
#include "starlhd/metrics.hpp"
#include "starlhd/simulation.hpp"
#include "starlhd/types.hpp"

namespace starlhd {

/// Parse failure carrying the 1-based row and column of the offending field.
class CsvError : public std::runtime_error {
 public:
  CsvError(const std::string& what, std::size_t row, std::size_t column)
      : std::runtime_error(what + " (row " + std::to_string(row) + ", column " +
                           std::to_string(column) + ")"),
        row_(row),
        column_(column) {}

  std::size_t row() const { return row_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

namespace detail {
inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

inline long long parse_int_field(const std::string& field, std::size_t row,
                                 std::size_t column) {
  long long value = 0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
  while (end > begin && (end[-1] == ' ' || end[-1] == '\t' || end[-1] == '\r')) --end;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end) {
    throw CsvError("expected an integer, got \"" + field + "\"", row, column);
  }
  return value;
}

inline double parse_real_field(const std::string& field, std::size_t row,
                               std::size_t column) {
  std::string trimmed = field;
  while (!trimmed.empty() &&
         (trimmed.back() == ' ' || trimmed.back() == '\t' || trimmed.back() == '\r')) {
    trimmed.pop_back();
  }
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(trimmed, &consumed);
  } catch (const std::exception&) {
    throw CsvError("expected a real number, got \"" + field + "\"", row, column);
  }
  while (consumed < trimmed.size() &&
         (trimmed[consumed] == ' ' || trimmed[consumed] == '\t')) {
    ++consumed;
  }
  if (consumed != trimmed.size()) {
    throw CsvError("trailing characters after number \"" + field + "\"", row, column);
  }
  return value;
}
}  // namespace detail

/// Design array CSV: header row "s_1,...,s_d" (the per-column level counts),
/// then n rows of integer levels.
inline void write_design_array_csv(const DesignArray& arr, std::ostream& out) {
  for (std::size_t j = 0; j < arr.n_factors(); ++j) {
    out << (j ? "," : "") << arr.level_counts()[j];
  }
  out << "\n";
  for (std::size_t i = 0; i < arr.n_runs(); ++i) {
    for (std::size_t j = 0; j < arr.n_factors(); ++j) {
      out << (j ? "," : "") << arr.values()[i][j];
    }
    out << "\n";
  }
}

/// Reads a design array CSV. Column balance is validated on construction;
/// the import claims nothing about strength (kind NOA, claim 0).
inline DesignArray read_design_array_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw CsvError("missing header row of level counts", 1, 1);
  }
  const std::vector<std::string> header = detail::split_csv_line(line);
  std::vector<int> level_counts;
  for (std::size_t j = 0; j < header.size(); ++j) {
    const long long s = detail::parse_int_field(header[j], 1, j + 1);
    if (s < 1) throw CsvError("level count must be positive", 1, j + 1);
    level_counts.push_back(static_cast<int>(s));
  }
  IntMatrix values;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    const std::vector<std::string> fields = detail::split_csv_line(line);
    if (fields.size() != level_counts.size()) {
      throw CsvError("expected " + std::to_string(level_counts.size()) + " fields, got " +
                         std::to_string(fields.size()),
                     row, 1);
    }
    std::vector<int> parsed;
    parsed.reserve(fields.size());
    for (std::size_t j = 0; j < fields.size(); ++j) {
      parsed.push_back(static_cast<int>(detail::parse_int_field(fields[j], row, j + 1)));
    }
    values.push_back(std::move(parsed));
  }
  return DesignArray(std::move(values), std::move(level_counts), 0, ArrayKind::noa);
}

/// Latin hypercube CSV: n rows of d reals at 17 significant digits (enough
/// to round-trip doubles exactly). No header.
inline void write_lhd_csv(const RealMatrix& points, std::ostream& out) {
  out << std::setprecision(17);
  for (const auto& point : points) {
    for (std::size_t j = 0; j < point.size(); ++j) {
      out << (j ? "," : "") << point[j];
    }
    out << "\n";
  }
}

inline RealMatrix read_lhd_csv(std::istream& in) {
  RealMatrix points;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    const std::vector<std::string> fields = detail::split_csv_line(line);
    if (!points.empty() && fields.size() != points.front().size()) {
      throw CsvError("ragged row: expected " + std::to_string(points.front().size()) +
                         " fields, got " + std::to_string(fields.size()),
                     row, 1);
    }
    std::vector<double> point;
    point.reserve(fields.size());
    for (std::size_t j = 0; j < fields.size(); ++j) {
      point.push_back(detail::parse_real_field(fields[j], row, j + 1));
    }
    points.push_back(std::move(point));
  }
  if (points.empty()) throw CsvError("design file has no rows", 1, 1);
  return points;
}

/// Projection metric table: one row per column subset, columns 1-based and
/// joined with ';' so the list stays one CSV field.
inline void write_projection_report_csv(const std::vector<DistanceSummary>& rows,
                                        std::ostream& out) {
  out << "columns,mid,aid\n" << std::setprecision(17);
  for (const DistanceSummary& summary : rows) {
    for (std::size_t k = 0; k < summary.columns.size(); ++k) {
      out << (k ? ";" : "") << summary.columns[k] + 1;
    }
    out << "," << summary.mid << "," << summary.aid << "\n";
  }
}

/// Long-format simulation samples: configuration,replicate,mid,aid.
inline void write_simulation_samples_csv(const std::vector<SimulationResult>& results,
                                         std::ostream& out) {
  out << "configuration,replicate,mid,aid\n" << std::setprecision(17);
  for (const SimulationResult& result : results) {
    for (std::size_t rep = 0; rep < result.mid_samples.size(); ++rep) {
      out << result.label << "," << rep + 1 << "," << result.mid_samples[rep] << ","
          << result.aid_samples[rep] << "\n";
    }
  }
}

/// Per-configuration medians and quartiles of both criteria.
inline void write_simulation_summary_csv(const std::vector<SimulationResult>& results,
                                         std::ostream& out) {
  out << "configuration,mid_q1,mid_median,mid_q3,aid_q1,aid_median,aid_q3\n"
      << std::setprecision(17);
  for (const SimulationResult& result : results) {
    const QuartileSummary mid_q = quartiles(result.mid_samples);
    const QuartileSummary aid_q = quartiles(result.aid_samples);
    out << result.label << "," << mid_q.q1 << "," << mid_q.median << "," << mid_q.q3
        << "," << aid_q.q1 << "," << aid_q.median << "," << aid_q.q3 << "\n";
  }
}

}  // namespace starlhd
