// Run configuration: CLI flags and line-oriented "key = value" files share one
// key namespace.  Unknown keys and malformed values raise ConfigError.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace prymcheck {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Suite { Charsums, Traces, CaPoints, Periods, Bounds, Galrep, Dickson, FaltingsSerre, Calibrate };
std::string suite_name(Suite s);
/// Accepts the suite names and the subcommand spellings (verify-traces, ...).
/// "all" expands to the six verification suites.
std::vector<Suite> parse_suites(std::string_view s);

struct RunConfig {
  std::vector<Suite> suites;
  std::vector<std::uint32_t> fields;  // field sizes q; empty = per-suite default
  std::string lambda = "all";         // "all", "random" or comma-separated element codes
  std::vector<long long> a_values;    // empty = {1, 2}
  int samples = 100;
  int precision_bits = 53;
  int jobs = 1;
  std::uint64_t seed = 20240601;
  std::string out;
  std::string write_config;  // calibrate: where to persist the values
  std::uint32_t naive_limit = 101;

  std::optional<int> t, t_prime, fhyp_unit;

  int g = 1;
  long long degk = 1;
  double h = 1.0;
  int dimb = 1;
  std::optional<std::vector<long long>> snowden;  // prime norms; adds the product constant row

  std::string ring;        // faltings-serre
  std::string spec_file;   // faltings-serre
  std::string gens_file;   // dickson

  void set(std::string_view key, std::string_view value);
  void load_file(const std::string& path);
  /// Throws ConfigError on an empty suite list or out-of-range values.
  void validate() const;
  nlohmann::json to_json() const;
};

/// Sizes q = p^k for each p in a comma list.
std::vector<std::uint32_t> parse_field_list(std::string_view primes, int k);

}  // namespace prymcheck
