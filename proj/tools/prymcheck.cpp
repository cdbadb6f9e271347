// Command-line driver.  Exit status: 0 all checks passed, 1 some check failed,
// 2 configuration error, 3 internal fault.
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prymcheck/config.hpp"
#include "prymcheck/suites.hpp"

namespace {

struct Flags {
  std::vector<std::pair<std::string, std::string>> kv;  // in command-line order
  std::string config_file;
  std::string k = "1";
  std::string p;
};

void add_common(CLI::App* sub, Flags& f) {
  auto put = [&f](const char* key) { return [&f, key](const std::string& v) { f.kv.emplace_back(key, v); }; };
  sub->add_option("--config", f.config_file, "key = value file read before the flags");
  sub->add_option("--p", f.p, "characteristic(s), comma separated");
  sub->add_option("--k", f.k, "extension degree for --p");
  sub->add_option_function<std::string>("--q", put("q"), "field size(s), comma separated");
  sub->add_option_function<std::string>("--lambda", put("lambda"), "all, random, or comma-separated codes");
  sub->add_option_function<std::string>("--a", put("a"), "values of a for C_a");
  sub->add_option_function<std::string>("--samples", put("samples"), "random samples / instances");
  sub->add_option_function<std::string>("--precision", put("precision"), "53 or 113 bits");
  sub->add_option_function<std::string>("--jobs", put("jobs"), "worker threads");
  sub->add_option_function<std::string>("--out", put("out"), "report path");
  sub->add_option_function<std::string>("--seed", put("seed"), "random seed");
  sub->add_option_function<std::string>("--t", put("t"), "sixth-root branch override");
  sub->add_option_function<std::string>("--t-prime", put("t_prime"), "QM branch override");
  sub->add_option_function<std::string>("--fhyp-unit", put("fhyp_unit"), "trace normalization override");
  sub->add_option_function<std::string>("--naive-limit", put("naive_limit"), "largest q for the naive count");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace prymcheck;
  CLI::App app{"prymcheck: exact and numerical checks for the Prym family y^6 = x^4(1-x)^3(1-lambda x)"};
  app.require_subcommand(0, 1);
  Flags flags;
  const std::map<std::string, std::string> subcommands{
      {"verify-charsums", "Jacobi-sum and finite 2F1 identities"},
      {"verify-traces", "trace additivity and point counts"},
      {"verify-ca", "rationality along C_a and the cover identity"},
      {"verify-periods", "period lattice, QM matrix, Schwarz continuation"},
      {"bounds", "composed isogeny-factor height bound"},
      {"dickson", "classify a subgroup of GL_2(F_q)"},
      {"faltings-serre", "span and trace check for a pair of representations"},
      {"calibrate", "determine or verify t, t' and the trace normalization"},
      {"all", "every verification suite"}};
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, help] : subcommands) {
    subs[name] = app.add_subcommand(name, help);
    add_common(subs[name], flags);
  }
  auto put = [&flags](const char* key) { return [&flags, key](const std::string& v) { flags.kv.emplace_back(key, v); }; };
  subs["bounds"]->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  for (const char* key : {"g", "degk", "h", "dimb", "snowden"})
    subs["bounds"]->add_option_function<std::string>(std::string("--") + key, put(key));
  subs["dickson"]->add_option_function<std::string>("--gens", put("gens"), "JSON list of 2x2 matrices");
  subs["faltings-serre"]->add_option_function<std::string>("--ring", put("ring"), "F_q, Z/N or GR(N,f)");
  subs["faltings-serre"]->add_option_function<std::string>("--spec", put("spec"), "JSON with rho, rho_prime, frob");
  subs["calibrate"]->add_option_function<std::string>("--write-config", put("write_config"), "persist values here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  RunConfig cfg;
  std::string out_path;
  try {
    if (!flags.config_file.empty()) cfg.load_file(flags.config_file);
    if (!flags.p.empty()) cfg.fields = parse_field_list(flags.p, std::stoi(flags.k));
    for (const auto& [k, v] : flags.kv) cfg.set(k, v);
    for (const auto& [name, sub] : subs)
      if (sub->parsed()) cfg.suites = parse_suites(name);
    cfg.validate();
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }

  try {
    const Report rep = run_suites(cfg);
    const std::string path = cfg.out.empty() ? "prymcheck-report.json" : cfg.out;
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write report to " << path << "\n";
      return 3;
    }
    out << rep.dump();
    std::cout << rep.summary_text() << "report: " << path << "\n";
    return rep.all_passed() ? 0 : 1;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal fault: " << e.what() << "\n";
    return 3;
  }
}
