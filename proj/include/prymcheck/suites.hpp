// Verification suites behind the command-line driver.  Each returns report
// rows; run_suites() aggregates and sorts them.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "prymcheck/config.hpp"
#include "prymcheck/report.hpp"
#include "prymcheck/ring.hpp"

namespace prymcheck {

std::vector<Row> suite_charsums(const RunConfig& cfg);
std::vector<Row> suite_traces(const RunConfig& cfg);
std::vector<Row> suite_ca_points(const RunConfig& cfg);
std::vector<Row> suite_periods(const RunConfig& cfg);
std::vector<Row> suite_bounds(const RunConfig& cfg);
std::vector<Row> suite_galrep(const RunConfig& cfg);
std::vector<Row> suite_dickson(const RunConfig& cfg);
std::vector<Row> suite_faltings_serre(const RunConfig& cfg);
std::vector<Row> suite_calibrate(const RunConfig& cfg);

/// Runs cfg.suites in order, timing each; rows come back sorted.
Report run_suites(const RunConfig& cfg);

/// A square matrix given as rows of ring-element strings (or integers).
RingMatrix parse_matrix(const FiniteLocalRing& R, const nlohmann::json& j);
std::vector<RingMatrix> parse_matrix_list(const FiniteLocalRing& R, const nlohmann::json& j);

/// The ten sample points X in (0, 0.9) used by the periods suite.
std::vector<double> period_sample_points();

}  // namespace prymcheck
