// JSON report: per-check rows, summary, timings.  Rows are kept sorted by
// (id, inputs) so the document does not depend on scheduling.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace prymcheck {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchema = 1;

enum class Status { Pass, Fail, Skip };
std::string status_string(Status s);

struct Row {
  std::string id;
  nlohmann::json inputs = nlohmann::json::object();
  std::string expected;
  std::string actual;
  Status status = Status::Pass;
  std::optional<double> tolerance;

  nlohmann::json to_json() const;
};

Row make_row(std::string id, nlohmann::json inputs, std::string expected, std::string actual, bool ok,
             std::optional<double> tolerance = std::nullopt);

struct Report {
  nlohmann::json config = nlohmann::json::object();
  std::vector<Row> rows;
  std::map<std::string, double> timings;  // seconds per suite

  void add(Row r) { rows.push_back(std::move(r)); }
  void append(std::vector<Row> rs);
  void sort_rows();
  std::size_t count(Status s) const;
  bool all_passed() const { return count(Status::Fail) == 0; }

  /// Rows only, canonical serialization; equal across job counts.
  std::string rows_dump() const;
  nlohmann::json to_json(bool with_timings = true) const;
  /// Serialized with LF line endings and a trailing newline.
  std::string dump(bool with_timings = true) const;
  std::string summary_text() const;
};

/// Shortest round-trip text for a double.
std::string fmt_double(double x);

}  // namespace prymcheck
