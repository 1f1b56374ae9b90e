// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.

#include <chrono>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "effcat/evlogic.hpp"
#include "effcat/products.hpp"
#include "suites.hpp"

using namespace effcat;

namespace {

const std::vector<std::string> kTags = {"error",  "partiality", "state",
                                        "list",   "multiset",   "powerset"};

// Every report produced during the run; criterion 9 replays their witnesses.
std::vector<json> g_reports;

InstanceConfig config_for(const std::string& tag) {
  InstanceConfig cfg;
  cfg.tag = tag;
  if (tag == "partiality") cfg.e_size = 1;
  return cfg;
}

LawReport run(const std::string& suite, const InstanceConfig& cfg,
              std::map<std::string, std::uint64_t> sizes = {{"A", 2}, {"B", 2}},
              HomBudget budget = {}, unsigned workers = 1) {
  SuiteSpec spec;
  spec.suite = suite;
  spec.instance = cfg;
  spec.sizes = std::move(sizes);
  spec.budget = budget;
  spec.workers = workers;
  LawReport report = run_suite(spec);
  g_reports.push_back(report.to_json());
  return report;
}

const LawResult* find_law(const LawReport& r, const std::string& id) {
  for (const LawResult& l : r.laws)
    if (l.id == id) return &l;
  return nullptr;
}

bool all_pass(const LawReport& r, double min_coverage = 1.0) {
  if (r.exit_severity() != 0) return false;
  for (const LawResult& l : r.laws)
    if (l.coverage < min_coverage) return false;
  return true;
}

std::vector<KMor> khoms(const EffectInstance& inst, const Obj& x, const Obj& y) {
  HomBudget budget;
  KHom hs(inst, x, y, budget);
  std::vector<KMor> out;
  for (std::uint64_t i = 0; i < hs.count(); ++i) out.push_back(hs.at(i));
  return out;
}

// 1. Effect-category axioms for all six instances over worlds with a base
//    object of size 3, >= 90% coverage, each suite within 60 seconds.
bool criterion1() {
  HomBudget budget;
  budget.max_hom_size = 200000;
  budget.max_enumerations = 400000000ULL;
  bool ok = true;
  for (const auto& tag : kTags) {
    auto t0 = std::chrono::steady_clock::now();
    LawReport r = run("consistency-axioms", config_for(tag), {{"A", 2}, {"B", 3}}, budget);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!all_pass(r, 0.9) || secs > 60.0) {
      std::cout << "  [criterion-1] " << tag << " severity=" << r.exit_severity()
                << " time=" << secs << "s\n";
      ok = false;
    }
  }
  return ok;
}

// 2. Semi-pure universal property: existence and uniqueness at sizes (2,2,2,2)
//    for error with |E| in {1,2} and state with |S|=2.
bool criterion2() {
  std::map<std::string, std::uint64_t> sizes = {{"A", 2}, {"B", 2}, {"C", 2}, {"D", 2}};
  std::vector<InstanceConfig> cfgs;
  InstanceConfig e1 = config_for("error");
  e1.e_size = 1;
  cfgs.push_back(e1);
  cfgs.push_back(config_for("error"));
  cfgs.push_back(config_for("state"));
  bool ok = true;
  for (const auto& cfg : cfgs) {
    LawReport r = run("semipure-universal", cfg, sizes);
    for (const char* id : {"defn-3.2-left-existence", "defn-3.2-right-existence",
                           "defn-3.2-left-uniqueness", "defn-3.2-right-uniqueness"}) {
      const LawResult* l = find_law(r, id);
      if (!l || l->verdict != Verdict::pass) {
        std::cout << "  [criterion-2] " << cfg.tag << "/E=" << cfg.e_size << " " << id
                  << " not passing\n";
        ok = false;
      }
    }
  }
  return ok;
}

// 3. Counterexample existence: (a) non-central morphisms in error and list;
//    (b) the hand-derived state left/right separation; (c) a non-reflexive
//    point of the common-bound relation in state; (d) fanout-then-fst != f1.
bool criterion3() {
  bool ok = true;
  Obj a = Obj::base("A", 2), b = Obj::base("B", 2);
  std::vector<Obj> world{a, b};
  HomBudget budget;

  for (const char* tag : {"error", "list"}) {
    InstancePtr inst = build_instance(config_for(tag));
    bool non_central = false;
    for (const KMor& f : khoms(*inst, a, b))
      if (!is_central(*inst, f, world, budget)) non_central = true;
    if (!non_central) {
      std::cout << "  [criterion-3a] no non-central morphism in " << tag << "\n";
      ok = false;
    }
  }

  InstancePtr st = build_instance(config_for("state"));
  {
    Obj one = Obj::base("X", 1), val = Obj::base("Y", 2);
    // f1 sets the state to 1 and returns the old state; f2 returns the state.
    KMor f1{one, val, FinFun(st->kl_dom(one), st->kl_cod(val), {2, 3})};
    KMor f2{one, val, FinFun(st->kl_dom(one), st->kl_cod(val), {0, 3})};
    SemFun left = sequential_left_s(*st, st->sem(f1), st->sem(f2));
    SemFun right = sequential_right_s(*st, st->sem(f1), st->sem(f2));
    Obj pc = Obj::prod(val, val);
    bool good = left != right && left.vals[0] == st->decode(1 * pc.size() + 1, pc) &&
                right.vals[0] == st->decode(1 * pc.size() + 0, pc);
    if (!good) {
      std::cout << "  [criterion-3b] hand-derived state witness does not separate\n";
      ok = false;
    }
  }
  {
    bool non_reflexive = false;
    for (const KMor& f : khoms(*st, a, b)) {
      SemFun sf = st->sem(f);
      if (!st->lr_consistent(sf, sf, budget)) non_reflexive = true;
    }
    if (!non_reflexive) {
      std::cout << "  [criterion-3c] common-bound relation is reflexive in state\n";
      ok = false;
    }
  }
  {
    auto ops = make_arrows(*st);
    FinFun p1 = proj1(b, b);
    bool separated = false;
    auto fs = khoms(*st, a, b);
    for (const KMor& f1 : fs) {
      SemFun s1 = st->sem(f1);
      for (const KMor& f2 : fs) {
        SemFun fan = ops->fanout(s1, st->sem(f2));
        if (ops->then(fan, ops->arr(p1)) != s1) separated = true;
      }
    }
    if (!separated) {
      std::cout << "  [criterion-3d] fanout-then-fst always recovers f1 in state\n";
      ok = false;
    }
  }
  return ok;
}

// 4. Pure => central, the center is a subcategory, and the five naturality
//    equations, for all instances over three size-2 base objects.
bool criterion4() {
  std::map<std::string, std::uint64_t> sizes = {{"A", 2}, {"B", 2}, {"C", 2}};
  bool ok = true;
  for (const auto& tag : kTags)
    for (const char* suite : {"centrality", "functoriality", "naturality"}) {
      LawReport r = run(suite, config_for(tag), sizes);
      if (!all_pass(r, 0.9)) {
        std::cout << "  [criterion-4] " << tag << "/" << suite
                  << " severity=" << r.exit_severity() << "\n";
        ok = false;
      }
    }
  return ok;
}

// 5. Sequential product properties for all instances; the extended-unicity
//    record fails for lists and passes for error with a single error point.
bool criterion5() {
  bool ok = true;
  for (const auto& tag : kTags) {
    LawReport r = run("sequential-property", config_for(tag));
    if (r.exit_severity() != 0) {
      std::cout << "  [criterion-5] " << tag << " severity=" << r.exit_severity() << "\n";
      ok = false;
    }
    if (tag == "list") {
      const LawResult* l = find_law(r, "rem-3.18-extended-unicity");
      if (!l || l->verdict != Verdict::fail) {
        std::cout << "  [criterion-5] extended-unicity did not fail for list\n";
        ok = false;
      }
    }
  }
  InstanceConfig e1 = config_for("error");
  e1.e_size = 1;
  LawReport r = run("sequential-property", e1);
  const LawResult* l = find_law(r, "rem-3.18-extended-unicity");
  if (!l || l->verdict != Verdict::pass) {
    std::cout << "  [criterion-5] extended-unicity did not pass for error |E|=1\n";
    ok = false;
  }
  return ok;
}

// 6. Arrow laws pass for every instance, and each numbered law fails on at
//    least one built-in mutant.
bool criterion6() {
  bool ok = true;
  for (const auto& tag : kTags) {
    LawReport r = run("arrow-laws", config_for(tag));
    if (!all_pass(r, 0.9)) {
      std::cout << "  [criterion-6] " << tag << " severity=" << r.exit_severity() << "\n";
      ok = false;
    }
  }
  InstancePtr inst = build_instance(config_for("error"));
  std::vector<ArrowOpsPtr> mutants;
  mutants.push_back(make_arrows_mutant_arr(*inst));
  mutants.push_back(make_arrows_mutant_then(*inst));
  mutants.push_back(make_arrows_mutant_first_x(*inst));
  mutants.push_back(make_arrows_mutant_first_z(*inst));
  std::set<std::string> killed;
  for (const auto& ops : mutants) {
    std::vector<Obj> world{Obj::base("A", 2), Obj::base("B", 2)};
    HomBudget budget;
    SuiteCtx ctx(*inst, world, budget, 1);
    suites::arrow_laws_impl(ctx, *ops);
    for (const LawResult& l : ctx.finalize())
      if (l.verdict == Verdict::fail) killed.insert(l.id);
  }
  for (const char* id :
       {"law-1-left-identity", "law-2-right-identity", "law-3-associativity",
        "law-4-arr-functor", "law-5-first-arr", "law-6-first-compose", "law-7-exchange",
        "law-8-fst", "law-9-assoc"})
    if (!killed.count(id)) {
      std::cout << "  [criterion-6] no mutant kills " << id << "\n";
      ok = false;
    }
  return ok;
}

// 7. Strength condition and Kleisli-product agreement for the monad-backed
//    instances.
bool criterion7() {
  bool ok = true;
  for (const char* tag : {"error", "list", "multiset", "powerset"}) {
    LawReport r = run("strength-theorem", config_for(tag));
    if (!all_pass(r, 0.9)) {
      std::cout << "  [criterion-7] " << tag << " severity=" << r.exit_severity() << "\n";
      ok = false;
    }
    for (const char* id : {"thm-4.10-strength-consistency", "defn-4.9-kleisli-equals-semipure"}) {
      const LawResult* l = find_law(r, id);
      if (!l || l->verdict != Verdict::pass) {
        std::cout << "  [criterion-7] " << tag << " " << id << " not passing\n";
        ok = false;
      }
    }
  }
  return ok;
}

// 8. The evaluation-logic comparison exhibits all three witness classes.
bool criterion8() {
  bool cons_no_term = false, term_no_cons = false, underdetermined = false;
  for (const char* tag : {"error", "partiality", "state", "list", "powerset"}) {
    LawReport r = run("evlogic-compare", config_for(tag));
    if (r.exit_severity() != 0) {
      std::cout << "  [criterion-8] " << tag << " severity=" << r.exit_severity() << "\n";
      return false;
    }
    for (const LawResult& l : r.laws) {
      if (l.verdict != Verdict::pass || l.witness.is_null()) continue;
      if (l.id == "evlogic-cons-no-termination-witness") cons_no_term = true;
      if (l.id == "evlogic-termination-no-cons-witness") term_no_cons = true;
      if (l.id == "evlogic-results-underdetermine-witness") underdetermined = true;
    }
  }
  if (!cons_no_term) std::cout << "  [criterion-8] missing cons-without-termination\n";
  if (!term_no_cons) std::cout << "  [criterion-8] missing termination-without-cons\n";
  if (!underdetermined) std::cout << "  [criterion-8] missing results-underdetermination\n";
  return cons_no_term && term_no_cons && underdetermined;
}

// 9. Determinism: byte-identical reports across runs and worker counts, and
//    every failure witness recorded during this run replays.
bool criterion9() {
  bool ok = true;
  const std::pair<const char*, const char*> picks[] = {
      {"state", "consistency-axioms"}, {"list", "sequential-property"},
      {"powerset", "centrality"}};
  for (const auto& [tag, suite] : picks) {
    std::string a = run(suite, config_for(tag)).to_json().dump(2);
    std::string b = run(suite, config_for(tag)).to_json().dump(2);
    std::string c = run(suite, config_for(tag), {{"A", 2}, {"B", 2}}, {}, 4).to_json().dump(2);
    if (a != b || a != c) {
      std::cout << "  [criterion-9] report for " << tag << "/" << suite
                << " is not byte-identical\n";
      ok = false;
    }
  }
  std::size_t replayed = 0;
  for (const json& report : g_reports)
    for (const json& entry : report.at("laws")) {
      if (entry.at("verdict") != "fail") continue;
      const json& w = entry.at("witness");
      if (w.is_null() || w.at("replay").is_null()) continue;
      bool good = false;
      try {
        good = recheck_witness(report, entry);
      } catch (const std::exception& e) {
        std::cout << "  [criterion-9] replay error for " << entry.at("id") << ": "
                  << e.what() << "\n";
      }
      if (!good) {
        std::cout << "  [criterion-9] witness for " << entry.at("id")
                  << " does not replay\n";
        ok = false;
      } else {
        ++replayed;
      }
    }
  std::cout << "  [criterion-9] replayed " << replayed << " failure witnesses\n";
  return ok;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    bool (*fn)();
  };
  const Criterion criteria[] = {
      {"criterion-1 effect-category axioms, six instances, size-3 world", criterion1},
      {"criterion-2 semi-pure universal property (existence and uniqueness)", criterion2},
      {"criterion-3 counterexample witnesses (non-central, state separations)", criterion3},
      {"criterion-4 purity implies centrality; center; naturality equations", criterion4},
      {"criterion-5 sequential properties; extended-unicity split verdicts", criterion5},
      {"criterion-6 Arrow laws and mutant sensitivity", criterion6},
      {"criterion-7 strength condition and Kleisli-product agreement", criterion7},
      {"criterion-8 evaluation-logic witness classes", criterion8},
      {"criterion-9 determinism and witness replay", criterion9},
  };
  bool all = true;
  for (const auto& c : criteria) {
    bool ok = false;
    try {
      ok = c.fn();
    } catch (const std::exception& e) {
      std::cout << "  [error] " << e.what() << "\n";
    }
    std::cout << (ok ? "PASS " : "FAIL ") << c.name << "\n";
    all = all && ok;
  }
  return all ? 0 : 1;
}
