#include "prymcheck/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "prymcheck/ffield.hpp"

namespace prymcheck {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_commas(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trim(cur));
  out.erase(std::remove(out.begin(), out.end(), std::string{}), out.end());
  return out;
}

template <class T>
T parse_number(std::string_view key, std::string_view v) {
  const std::string s = trim(v);
  T out{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw ConfigError("bad value '" + s + "' for key '" + std::string(key) + "'");
  return out;
}

double parse_double(std::string_view key, std::string_view v) {
  const std::string s = trim(v);
  try {
    std::size_t used = 0;
    const double x = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing");
    return x;
  } catch (const std::exception&) {
    throw ConfigError("bad value '" + s + "' for key '" + std::string(key) + "'");
  }
}

}  // namespace

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::Charsums: return "charsums";
    case Suite::Traces: return "traces";
    case Suite::CaPoints: return "ca-points";
    case Suite::Periods: return "periods";
    case Suite::Bounds: return "bounds";
    case Suite::Galrep: return "galrep";
    case Suite::Dickson: return "dickson";
    case Suite::FaltingsSerre: return "faltings-serre";
    case Suite::Calibrate: return "calibrate";
  }
  return "?";
}

std::vector<Suite> parse_suites(std::string_view text) {
  std::vector<Suite> out;
  auto add = [&](Suite s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  for (const auto& name : split_commas(text)) {
    if (name == "all") {
      for (Suite s : {Suite::Charsums, Suite::Traces, Suite::CaPoints, Suite::Periods, Suite::Bounds, Suite::Galrep})
        add(s);
    } else if (name == "charsums" || name == "verify-charsums") {
      add(Suite::Charsums);
    } else if (name == "traces" || name == "verify-traces") {
      add(Suite::Traces);
    } else if (name == "ca-points" || name == "verify-ca") {
      add(Suite::CaPoints);
    } else if (name == "periods" || name == "verify-periods") {
      add(Suite::Periods);
    } else if (name == "bounds") {
      add(Suite::Bounds);
    } else if (name == "galrep") {
      add(Suite::Galrep);
    } else if (name == "dickson") {
      add(Suite::Dickson);
    } else if (name == "faltings-serre") {
      add(Suite::FaltingsSerre);
    } else if (name == "calibrate") {
      add(Suite::Calibrate);
    } else {
      throw ConfigError("unknown suite '" + name + "'");
    }
  }
  return out;
}

std::vector<std::uint32_t> parse_field_list(std::string_view primes, int k) {
  if (k < 1) throw ConfigError("k must be positive");
  std::vector<std::uint32_t> out;
  for (const auto& s : split_commas(primes)) {
    const auto p = parse_number<std::uint64_t>("p", s);
    if (!is_prime(p)) throw ConfigError("p = " + s + " is not prime");
    std::uint64_t q = 1;
    for (int i = 0; i < k; ++i) {
      q *= p;
      if (q > FqField::kMaxOrder) throw ConfigError("field size " + s + "^" + std::to_string(k) + " too large");
    }
    out.push_back(static_cast<std::uint32_t>(q));
  }
  return out;
}

void RunConfig::set(std::string_view key_in, std::string_view value) {
  const std::string key = trim(key_in);
  const std::string v = trim(value);
  if (key == "suite") {
    suites = parse_suites(v);
  } else if (key == "q") {
    fields.clear();
    for (const auto& s : split_commas(v)) fields.push_back(parse_number<std::uint32_t>(key, s));
  } else if (key == "p") {
    fields = parse_field_list(v, 1);
  } else if (key == "lambda") {
    lambda = v;
  } else if (key == "a") {
    a_values.clear();
    for (const auto& s : split_commas(v)) a_values.push_back(parse_number<long long>(key, s));
  } else if (key == "samples") {
    samples = parse_number<int>(key, v);
  } else if (key == "precision") {
    precision_bits = parse_number<int>(key, v);
  } else if (key == "jobs") {
    jobs = parse_number<int>(key, v);
  } else if (key == "seed") {
    seed = parse_number<std::uint64_t>(key, v);
  } else if (key == "out") {
    out = v;
  } else if (key == "write_config") {
    write_config = v;
  } else if (key == "naive_limit") {
    naive_limit = parse_number<std::uint32_t>(key, v);
  } else if (key == "t") {
    t = parse_number<int>(key, v);
  } else if (key == "t_prime") {
    t_prime = parse_number<int>(key, v);
  } else if (key == "fhyp_unit") {
    fhyp_unit = parse_number<int>(key, v);
  } else if (key == "g") {
    g = parse_number<int>(key, v);
  } else if (key == "degk") {
    degk = parse_number<long long>(key, v);
  } else if (key == "h") {
    h = parse_double(key, v);
  } else if (key == "dimb") {
    dimb = parse_number<int>(key, v);
  } else if (key == "snowden") {
    snowden.emplace();
    for (const auto& n : split_commas(v)) snowden->push_back(parse_number<long long>(key, n));
  } else if (key == "ring") {
    ring = v;
  } else if (key == "spec") {
    spec_file = v;
  } else if (key == "gens") {
    gens_file = v;
  } else {
    throw ConfigError("unknown configuration key '" + key + "'");
  }
}

void RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
    try {
      set(line.substr(0, eq), line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

void RunConfig::validate() const {
  if (suites.empty()) throw ConfigError("no suite selected");
  if (jobs < 1 || jobs > 256) throw ConfigError("jobs must be in [1, 256]");
  if (samples < 0) throw ConfigError("samples must be non-negative");
  if (precision_bits != 53 && precision_bits != 113) throw ConfigError("precision must be 53 or 113");
  for (auto q : fields) {
    if (q < 2 || q > FqField::kMaxOrder || prime_factors(q).size() != 1)
      throw ConfigError("field size " + std::to_string(q) + " is not a prime power in range");
  }
  if (lambda != "all" && lambda != "random")
    for (const auto& s : split_commas(lambda)) (void)parse_number<long long>("lambda", s);
  auto unit = [](const std::optional<int>& x, const char* name) {
    if (x && (*x < 0 || *x > 5)) throw ConfigError(std::string(name) + " must be in [0, 5]");
  };
  unit(t, "t");
  unit(t_prime, "t_prime");
  unit(fhyp_unit, "fhyp_unit");
  if (g < 1) throw ConfigError("g must be positive");
  if (degk < 1) throw ConfigError("degk must be positive");
  if (dimb < 1 || dimb > g) throw ConfigError("dimb must be in [1, g]");
  if (snowden)
    for (auto n : *snowden)
      if (n < 2) throw ConfigError("snowden norms must be at least 2");
  for (auto s : suites) {
    if (s == Suite::Dickson && gens_file.empty()) throw ConfigError("dickson needs a generator file");
    if (s == Suite::FaltingsSerre && (ring.empty() || spec_file.empty()))
      throw ConfigError("faltings-serre needs a ring and a spec file");
  }
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j;
  std::vector<std::string> names;
  for (auto s : suites) names.push_back(suite_name(s));
  j["suites"] = names;
  j["fields"] = fields;
  j["lambda"] = lambda;
  j["a"] = a_values;
  j["samples"] = samples;
  j["precision"] = precision_bits;
  j["seed"] = seed;
  j["naive_limit"] = naive_limit;
  j["t"] = t ? nlohmann::json(*t) : nlohmann::json(nullptr);
  j["t_prime"] = t_prime ? nlohmann::json(*t_prime) : nlohmann::json(nullptr);
  j["fhyp_unit"] = fhyp_unit ? nlohmann::json(*fhyp_unit) : nlohmann::json(nullptr);
  j["g"] = g;
  j["degk"] = degk;
  j["h"] = h;
  j["dimb"] = dimb;
  if (snowden) j["snowden"] = *snowden;
  if (!ring.empty()) j["ring"] = ring;
  if (!spec_file.empty()) j["spec"] = spec_file;
  if (!gens_file.empty()) j["gens"] = gens_file;
  // jobs and output paths are left out so reports compare equal across them.
  return j;
}

}  // namespace prymcheck
