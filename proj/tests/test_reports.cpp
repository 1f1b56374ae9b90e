#include <string>

#include "doctest.h"
#include "suites.hpp"

using namespace effcat;

namespace {

SuiteSpec spec_for(const std::string& suite, const std::string& tag) {
  SuiteSpec spec;
  spec.suite = suite;
  spec.instance.tag = tag;
  if (tag == "partiality") spec.instance.e_size = 1;
  return spec;
}

/// Runs a suite body against an explicit (possibly mutant) instance.
std::vector<LawResult> run_on(const EffectInstance& inst, void (*suite)(SuiteCtx&)) {
  std::vector<Obj> world{Obj::base("A", 2), Obj::base("B", 2)};
  HomBudget budget;
  SuiteCtx ctx(inst, world, budget, 1);
  suite(ctx);
  return ctx.finalize();
}

bool law_fails(const std::vector<LawResult>& laws, const std::string& id) {
  for (const LawResult& r : laws)
    if (r.id == id) return r.verdict == Verdict::fail;
  return false;
}

bool any_law_fails(const std::vector<LawResult>& laws) {
  for (const LawResult& r : laws)
    if (r.kind != LawKind::report && r.verdict == Verdict::fail) return true;
  return false;
}

}  // namespace

TEST_CASE("reports are byte-identical across runs and worker counts") {
  for (const char* suite : {"consistency-axioms", "semipure-universal", "centrality"}) {
    CAPTURE(suite);
    SuiteSpec one = spec_for(suite, "state");
    SuiteSpec four = one;
    four.workers = 4;
    std::string a = run_suite(one).to_json().dump(2);
    std::string b = run_suite(one).to_json().dump(2);
    std::string c = run_suite(four).to_json().dump(2);
    CHECK(a == b);
    CHECK(a == c);
  }
}

TEST_CASE("recorded witnesses replay against a fresh instance") {
  // The extended-unicity verdict is an expected (report-kind) failure for
  // lists, so its witness exercises the failure replay path.
  LawReport report = run_suite(spec_for("sequential-property", "list"));
  json rj = report.to_json();
  bool replayed_one = false;
  for (const json& entry : rj.at("laws")) {
    if (entry.at("witness").is_null()) continue;
    if (entry.at("witness").at("replay").is_null()) continue;
    CAPTURE(entry.at("id").get<std::string>());
    CHECK(recheck_witness(rj, entry));
    replayed_one = true;
  }
  CHECK(replayed_one);
}

TEST_CASE("witness replay rejects a drifted configuration") {
  LawReport report = run_suite(spec_for("sequential-property", "list"));
  json rj = report.to_json();
  const json* failing = nullptr;
  for (const json& entry : rj.at("laws"))
    if (entry.at("verdict") == "fail" && !entry.at("witness").is_null() &&
        !entry.at("witness").at("replay").is_null())
      failing = &entry;
  REQUIRE(failing != nullptr);
  CHECK(recheck_witness(rj, *failing));
  // Same witness, smaller carriers: the recorded tables no longer fit.
  json drifted = rj;
  drifted["config"]["instance"]["L"] = 1;
  CHECK_THROWS_AS(recheck_witness(drifted, *failing), structural_error);
}

TEST_CASE("an exhausted budget yields incomplete verdicts and severity 3") {
  SuiteSpec spec = spec_for("consistency-axioms", "error");
  spec.budget.max_enumerations = 1;
  LawReport report = run_suite(spec);
  CHECK(report.exit_severity() == 3);
  for (const LawResult& r : report.laws) {
    CAPTURE(r.id);
    CHECK(r.verdict == Verdict::incomplete_budget);
  }
}

TEST_CASE("suite sensitivity: instance mutants are flagged") {
  InstanceConfig cfg;  // error, |E| = 2

  SUBCASE("degraded effect comparison breaks the route agreement") {
    auto laws = run_on(*make_mutant_effect_blind(cfg), suites::consistency_axioms);
    CHECK(law_fails(laws, "rem-2.3-effect-route-agreement"));
  }
  SUBCASE("consistency that holds everywhere breaks complementarity") {
    auto laws = run_on(*make_mutant_always_consistent(cfg), suites::consistency_axioms);
    CHECK(any_law_fails(laws));
    CHECK(law_fails(laws, "defn-2.6-complementarity"));
  }
  SUBCASE("extended consistency degraded to equality loses the extension") {
    auto laws = run_on(*make_mutant_extended_total(cfg), suites::extended_consistency);
    CHECK(any_law_fails(laws));
  }
  SUBCASE("a twisted semi-pure product violates its universal property") {
    auto laws = run_on(*make_mutant_semipure_twist(cfg), suites::semipure_universal);
    CHECK(any_law_fails(laws));
  }
  SUBCASE("a twisted strength violates the strength theorem suite") {
    auto laws = run_on(*make_mutant_strength_twist(cfg), suites::strength_theorem);
    CHECK(any_law_fails(laws));
  }
}
