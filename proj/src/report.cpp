#include "prymcheck/report.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace prymcheck {

std::string status_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "?";
}

std::string fmt_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

nlohmann::json Row::to_json() const {
  nlohmann::json j;
  j["id"] = id;
  j["inputs"] = inputs;
  j["expected"] = expected;
  j["actual"] = actual;
  j["status"] = status_string(status);
  j["tolerance"] = tolerance ? nlohmann::json(*tolerance) : nlohmann::json(nullptr);
  return j;
}

Row make_row(std::string id, nlohmann::json inputs, std::string expected, std::string actual, bool ok,
             std::optional<double> tolerance) {
  Row r;
  r.id = std::move(id);
  r.inputs = std::move(inputs);
  r.expected = std::move(expected);
  r.actual = std::move(actual);
  r.status = ok ? Status::Pass : Status::Fail;
  r.tolerance = tolerance;
  return r;
}

void Report::append(std::vector<Row> rs) {
  for (auto& r : rs) rows.push_back(std::move(r));
}

void Report::sort_rows() {
  std::stable_sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    if (x.id != y.id) return x.id < y.id;
    return x.inputs < y.inputs;
  });
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [s](const Row& r) { return r.status == s; }));
}

std::string Report::rows_dump() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) arr.push_back(r.to_json());
  return arr.dump();
}

nlohmann::json Report::to_json(bool with_timings) const {
  nlohmann::json j;
  j["schema_version"] = kReportSchema;
  j["tool_version"] = kToolVersion;
  j["config"] = config;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) arr.push_back(r.to_json());
  j["rows"] = arr;
  j["summary"] = {{"passed", count(Status::Pass)}, {"failed", count(Status::Fail)}, {"skipped", count(Status::Skip)}};
  if (with_timings) {
    nlohmann::json t = nlohmann::json::object();
    for (const auto& [k, v] : timings) t[k] = v;
    j["timing_seconds"] = t;
  }
  return j;
}

std::string Report::dump(bool with_timings) const { return to_json(with_timings).dump(2) + "\n"; }

std::string Report::summary_text() const {
  std::map<std::string, std::pair<std::size_t, std::size_t>> per_id;  // pass, fail
  for (const auto& r : rows) {
    auto& c = per_id[r.id];
    if (r.status == Status::Pass) ++c.first;
    if (r.status == Status::Fail) ++c.second;
  }
  std::ostringstream os;
  for (const auto& [id, c] : per_id)
    os << (c.second ? "FAIL " : "ok   ") << id << "  " << c.first << " passed, " << c.second << " failed\n";
  for (const auto& r : rows)
    if (r.status == Status::Fail)
      os << "  failed " << r.id << " " << r.inputs.dump() << ": expected " << r.expected << ", got " << r.actual
         << "\n";
  os << "total: " << count(Status::Pass) << " passed, " << count(Status::Fail) << " failed, " << count(Status::Skip)
     << " skipped\n";
  for (const auto& [k, v] : timings) os << "time " << k << ": " << fmt_double(v) << " s\n";
  return os.str();
}

}  // namespace prymcheck
