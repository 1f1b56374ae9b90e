#include "doctest.h"
#include "effcat/evlogic.hpp"
#include "effcat/lawsuite.hpp"

using namespace effcat;

TEST_CASE("pure closed computations result in exactly their value") {
  Obj y = Obj::base("Y", 3);
  for (const char* tag : {"error", "partiality", "state", "list", "powerset"}) {
    CAPTURE(tag);
    InstanceConfig cfg;
    cfg.tag = tag;
    if (cfg.tag == "partiality") cfg.e_size = 1;
    InstancePtr inst = build_instance(cfg);
    for (std::uint64_t a = 0; a < y.size(); ++a) {
      SemFun c = inst->pure_sem(global_elem(y, a));
      for (std::uint64_t v = 0; v < y.size(); ++v)
        CHECK(results_in(*inst, c, v) == (a == v));
    }
  }
}

TEST_CASE("multiset has no evaluation-logic reading") {
  CHECK(!evlogic_supported("multiset"));
  SuiteSpec spec;
  spec.suite = "evlogic-compare";
  spec.instance.tag = "multiset";
  CHECK_THROWS_AS(run_suite(spec), config_error);
}

TEST_CASE("the comparison suite passes on every supported instance") {
  for (const char* tag : {"error", "partiality", "state", "list", "powerset"}) {
    CAPTURE(tag);
    SuiteSpec spec;
    spec.suite = "evlogic-compare";
    spec.instance.tag = tag;
    if (spec.instance.tag == "partiality") spec.instance.e_size = 1;
    LawReport report = run_suite(spec);
    CHECK(report.exit_severity() == 0);
    for (const LawResult& r : report.laws) {
      CAPTURE(r.id);
      CHECK(r.verdict == Verdict::pass);
    }
  }
}

TEST_CASE("all three separating witness classes appear at default sizes") {
  bool cons_without_termination = false;
  bool termination_without_cons = false;
  bool results_underdetermine = false;
  for (const char* tag : {"error", "partiality", "state", "list", "powerset"}) {
    SuiteSpec spec;
    spec.suite = "evlogic-compare";
    spec.instance.tag = tag;
    if (spec.instance.tag == "partiality") spec.instance.e_size = 1;
    for (const LawResult& r : run_suite(spec).laws) {
      if (r.verdict != Verdict::pass || r.witness.is_null()) continue;
      if (r.id == "evlogic-cons-no-termination-witness") cons_without_termination = true;
      if (r.id == "evlogic-termination-no-cons-witness") termination_without_cons = true;
      if (r.id == "evlogic-results-underdetermine-witness") results_underdetermine = true;
    }
  }
  CHECK(cons_without_termination);
  CHECK(termination_without_cons);
  CHECK(results_underdetermine);
}
