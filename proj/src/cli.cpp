#include "effcat/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

namespace effcat {

namespace {

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw config_error("invalid numeric value for " + what + ": '" + s + "'");
  }
}

void load_config_file(CliConfig& cfg, const std::string& path, bool& e_explicit) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot read config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw config_error(std::string("malformed config file: ") + e.what());
  }
  if (j.contains("instance")) {
    const json& ji = j.at("instance");
    e_explicit = e_explicit || (ji.is_object() && ji.contains("E"));
    try {
      if (ji.is_string()) {
        cfg.instance.tag = ji.get<std::string>();
      } else {
        if (!ji.contains("tag")) {
          json with_tag = ji;
          with_tag["tag"] = cfg.instance.tag;
          cfg.instance = InstanceConfig::from_json(with_tag);
        } else {
          cfg.instance = InstanceConfig::from_json(ji);
        }
      }
    } catch (const std::exception& e) {
      throw config_error(std::string("malformed instance config: ") + e.what());
    }
  }
  if (j.contains("sizes")) {
    for (auto it = j.at("sizes").begin(); it != j.at("sizes").end(); ++it)
      cfg.sizes[it.key()] = it.value().get<std::uint64_t>();
  }
  if (j.contains("budget")) {
    const json& jb = j.at("budget");
    if (jb.contains("max-hom-size"))
      cfg.budget.max_hom_size = jb.at("max-hom-size").get<std::uint64_t>();
    if (jb.contains("max-enumerations"))
      cfg.budget.max_enumerations = jb.at("max-enumerations").get<std::uint64_t>();
  }
  if (j.contains("workers")) cfg.workers = j.at("workers").get<unsigned>();
}

int severity_of(const LawReport& r) { return r.exit_severity(); }

/// Combines severities with precedence 2 > 1 > 3 > 0.
int combine_severity(int a, int b) {
  auto rank = [](int s) {
    switch (s) {
      case 2: return 3;
      case 1: return 2;
      case 3: return 1;
      default: return 0;
    }
  };
  return rank(a) >= rank(b) ? a : b;
}

}  // namespace

void apply_set(CliConfig& cfg, const std::string& kv) {
  auto eq = kv.find('=');
  if (eq == std::string::npos || eq == 0)
    throw config_error("--set expects key=value, got '" + kv + "'");
  std::string key = kv.substr(0, eq);
  std::string val = kv.substr(eq + 1);
  if (key == "E") {
    cfg.instance.e_size = static_cast<std::uint32_t>(parse_u64(val, key));
  } else if (key == "S") {
    cfg.instance.s_size = static_cast<std::uint32_t>(parse_u64(val, key));
  } else if (key == "L") {
    cfg.instance.list_cap = static_cast<std::uint32_t>(parse_u64(val, key));
  } else if (key == "M") {
    cfg.instance.mult_cap = static_cast<std::uint32_t>(parse_u64(val, key));
  } else if (key == "max-hom-size") {
    cfg.budget.max_hom_size = parse_u64(val, key);
  } else if (key == "max-enumerations") {
    cfg.budget.max_enumerations = parse_u64(val, key);
  } else if (key == "workers") {
    cfg.workers = static_cast<unsigned>(parse_u64(val, key));
  } else if (!key.empty() && std::isupper(static_cast<unsigned char>(key[0])) &&
             key.size() <= 8) {
    cfg.sizes[key] = parse_u64(val, key);  // named base object cardinality
  } else {
    throw config_error("unknown --set key '" + key +
                       "'; valid keys: E, S, L, M, max-hom-size, max-enumerations, "
                       "workers, or a base-object name (A, B, ...)");
  }
}

std::string emit_report(const std::vector<LawReport>& reports, const std::string& format) {
  if (format == "json") {
    if (reports.size() == 1) return reports[0].to_json().dump(2) + "\n";
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    return arr.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& r : reports) os << r.to_text();
  return os.str();
}

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"effcat: exhaustive law checking for finite effect instances"};
  app.require_subcommand(1);

  CLI::App* check = app.add_subcommand("check", "run law suites and emit a report");
  std::string instance_tag;
  std::string suite = "all";
  std::string config_path, report_path, format = "text";
  std::vector<std::string> sets;
  unsigned workers = 0;  // 0: not set on the command line
  check->add_option("--instance", instance_tag, "effect instance tag")->required();
  check->add_option("--suite", suite, "suite id or 'all'");
  check->add_option("--config", config_path, "JSON config file");
  check->add_option("--report", report_path, "write the report to this file");
  check->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  check->add_option("--set", sets, "override key=value (repeatable; last wins)");
  check->add_option("--workers", workers, "worker threads for quantifier scans");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    CliConfig cfg;
    if (const char* env = std::getenv("EFFCAT_BUDGET"))
      cfg.budget.max_hom_size = parse_u64(env, "EFFCAT_BUDGET");
    // Partiality is the one-error-value instance; default |E| accordingly
    // unless the user pinned it explicitly.
    bool e_explicit = false;
    if (!config_path.empty()) load_config_file(cfg, config_path, e_explicit);
    cfg.instance.tag = instance_tag;
    for (const std::string& kv : sets) e_explicit = e_explicit || kv.rfind("E=", 0) == 0;
    if (instance_tag == "partiality" && !e_explicit) cfg.instance.e_size = 1;
    for (const std::string& kv : sets) apply_set(cfg, kv);
    if (workers > 0) cfg.workers = workers;
    cfg.report_path = report_path;
    cfg.format = format;

    auto known = suite_ids();
    if (suite == "all") {
      for (const std::string& id : known)
        if (suite_valid_for(id, cfg.instance.tag)) cfg.suites.push_back(id);
    } else {
      bool ok = false;
      for (const std::string& id : known) ok = ok || id == suite;
      if (!ok) {
        std::string msg = "unknown suite '" + suite + "'; valid suites:";
        for (const std::string& id : known) msg += " " + id;
        throw config_error(msg);
      }
      cfg.suites.push_back(suite);
    }

    std::vector<LawReport> reports;
    int severity = 0;
    for (const std::string& id : cfg.suites) {
      SuiteSpec spec;
      spec.suite = id;
      spec.instance = cfg.instance;
      spec.sizes = cfg.sizes;
      spec.budget = cfg.budget;
      spec.workers = cfg.workers;
      reports.push_back(run_suite(spec));
      severity = combine_severity(severity, severity_of(reports.back()));
    }

    std::string out = emit_report(reports, cfg.format);
    if (!cfg.report_path.empty()) {
      std::ofstream f(cfg.report_path, std::ios::binary);
      if (!f) throw config_error("cannot write report file: " + cfg.report_path);
      f << out;
      if (!f) throw config_error("failed writing report file: " + cfg.report_path);
    } else {
      std::cout << out;
    }
    return severity;
  } catch (const config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const structural_error& e) {
    std::cerr << "structural error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace effcat
