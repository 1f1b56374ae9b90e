#include "effcat/lawsuite.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "effcat/witness.hpp"
#include "suites.hpp"

namespace effcat {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped_overflow: return "skipped-overflow";
    case Verdict::incomplete_budget: return "incomplete-budget";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string law_kind_name(LawKind k) {
  switch (k) {
    case LawKind::law: return "law";
    case LawKind::existence: return "existence";
    case LawKind::report: return "report";
  }
  return "unknown";
}

json LawResult::to_json() const {
  json j;
  j["id"] = id;
  j["anchor"] = anchor;
  j["kind"] = law_kind_name(kind);
  j["verdict"] = verdict_name(verdict);
  j["cases-total"] = cases_total;
  j["cases-checked"] = cases_checked;
  j["cases-skipped"] = cases_skipped;
  j["coverage"] = coverage;
  j["witness"] = witness;
  j["note"] = note;
  return j;
}

LawResult Law::finalize() const {
  LawResult r;
  r.id = id_;
  r.anchor = anchor_;
  r.kind = kind_;
  r.cases_checked = checked_;
  r.cases_skipped = skipped_;
  r.cases_total = checked_ + skipped_;
  r.witness = witness_;
  r.note = note_;
  r.coverage = r.cases_total == 0 ? 1.0
                                  : static_cast<double>(checked_) /
                                        static_cast<double>(r.cases_total);
  if (incomplete_) {
    r.verdict = Verdict::incomplete_budget;
    if (r.note.empty())
      r.note = "planned work exceeds the enumeration budget (" +
               std::to_string(required_) + " cases)";
    return r;
  }
  if (kind_ == LawKind::existence) {
    r.verdict = found_ ? Verdict::pass : Verdict::fail;
    return r;
  }
  if (kind_ == LawKind::report) {
    r.verdict = fail_index_ != kNoFail ? Verdict::fail : Verdict::pass;
    return r;
  }
  if (fail_index_ != kNoFail) {
    r.verdict = Verdict::fail;
    return r;
  }
  if (checked_ == 0 && skipped_ > 0) {
    r.verdict = Verdict::skipped_overflow;
    return r;
  }
  if (r.coverage < 0.9) {
    r.verdict = Verdict::inconclusive;
    return r;
  }
  r.verdict = Verdict::pass;
  return r;
}

std::vector<LawResult> SuiteCtx::finalize() const {
  std::vector<LawResult> out;
  out.reserve(laws_.size());
  for (const Law& l : laws_) out.push_back(l.finalize());
  std::sort(out.begin(), out.end(),
            [](const LawResult& a, const LawResult& b) { return a.id < b.id; });
  return out;
}

int LawReport::exit_severity() const {
  bool soft = false;
  for (const auto& l : laws) {
    if (l.kind == LawKind::report) continue;
    if (l.verdict == Verdict::fail) return 1;
    if (l.verdict == Verdict::incomplete_budget || l.verdict == Verdict::inconclusive ||
        l.verdict == Verdict::skipped_overflow)
      soft = true;
  }
  return soft ? 3 : 0;
}

json LawReport::to_json() const {
  json j;
  j["suite"] = suite;
  j["config"] = config_echo;
  json arr = json::array();
  for (const auto& l : laws) arr.push_back(l.to_json());
  j["laws"] = arr;
  j["severity"] = exit_severity();
  return j;
}

std::string LawReport::to_text() const {
  std::ostringstream os;
  os << "suite " << suite << "  (" << config_echo.at("instance").at("tag").get<std::string>()
     << ")\n";
  for (const auto& l : laws) {
    os << "  [" << verdict_name(l.verdict) << "] " << l.id;
    if (l.kind != LawKind::law) os << " (" << law_kind_name(l.kind) << ")";
    os << "  checked=" << l.cases_checked << " skipped=" << l.cases_skipped;
    if (!l.note.empty()) os << "  -- " << l.note;
    os << "\n";
    if (!l.witness.is_null() && l.witness.contains("bindings"))
      os << "      witness: " << l.witness.at("bindings").dump() << "\n";
  }
  os << "result: severity " << exit_severity() << "\n";
  return os.str();
}

namespace {

struct SuiteDef {
  std::string id;
  void (*run)(SuiteCtx&);
  bool (*valid)(const std::string& tag);
};

bool any_tag(const std::string&) { return true; }
bool monad_only(const std::string& tag) { return tag != "state"; }
bool evlogic_tags(const std::string& tag) { return tag != "multiset"; }

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> defs = {
      {"consistency-axioms", suites::consistency_axioms, any_tag},
      {"extended-consistency", suites::extended_consistency, any_tag},
      {"monad-laws", suites::monad_laws, monad_only},
      {"semipure-universal", suites::semipure_universal, any_tag},
      {"product-props", suites::product_props, any_tag},
      {"centrality", suites::centrality, any_tag},
      {"functoriality", suites::functoriality, any_tag},
      {"naturality", suites::naturality, any_tag},
      {"sequential-property", suites::sequential_property, any_tag},
      {"strength-theorem", suites::strength_theorem, monad_only},
      {"arrow-laws", suites::arrow_laws, any_tag},
      {"evlogic-compare", suites::evlogic_compare, evlogic_tags},
  };
  return defs;
}

std::vector<Obj> world_objects(const std::map<std::string, std::uint64_t>& sizes) {
  if (sizes.empty()) throw config_error("the world needs at least one base object");
  std::vector<Obj> out;
  for (const auto& [name, size] : sizes) {
    if (size == 0 || size > 16)
      throw config_error("base object '" + name + "' must have size 1..16");
    out.push_back(Obj::base(name, size));
  }
  return out;
}

}  // namespace

std::vector<std::string> suite_ids() {
  std::vector<std::string> out;
  for (const auto& d : registry()) out.push_back(d.id);
  return out;
}

bool suite_valid_for(const std::string& suite, const std::string& tag) {
  for (const auto& d : registry())
    if (d.id == suite) return d.valid(tag);
  throw config_error("unknown suite: " + suite);
}

LawReport run_suite(const SuiteSpec& spec) {
  const SuiteDef* def = nullptr;
  for (const auto& d : registry())
    if (d.id == spec.suite) def = &d;
  if (!def) throw config_error("unknown suite: " + spec.suite);
  if (!def->valid(spec.instance.tag))
    throw config_error("suite '" + spec.suite + "' is not defined for instance '" +
                       spec.instance.tag + "'");

  InstancePtr inst = build_instance(spec.instance);
  SuiteCtx ctx(*inst, world_objects(spec.sizes), spec.budget, spec.workers);
  def->run(ctx);

  LawReport report;
  report.suite = spec.suite;
  report.config_echo = json{{"instance", spec.instance.to_json()},
                            {"sizes", spec.sizes},
                            {"budget",
                             json{{"max-hom-size", spec.budget.max_hom_size},
                                  {"max-enumerations", spec.budget.max_enumerations}}},
                            {"workers-independent", true}};
  report.laws = ctx.finalize();
  return report;
}

bool recheck_witness(const json& report, const json& law_entry) {
  const json& echo = report.at("config");
  InstanceConfig cfg = InstanceConfig::from_json(echo.at("instance"));
  InstancePtr inst = build_instance(cfg);
  HomBudget budget;
  budget.max_hom_size = echo.at("budget").at("max-hom-size").get<std::uint64_t>();
  budget.max_enumerations = echo.at("budget").at("max-enumerations").get<std::uint64_t>();
  std::map<std::string, std::uint64_t> sizes =
      echo.at("sizes").get<std::map<std::string, std::uint64_t>>();
  wit::EvalEnv env{*inst, budget, world_objects(sizes)};
  return wit::replay(env, law_entry.at("witness"));
}

}  // namespace effcat
