#include <vector>

#include "doctest.h"
#include "effcat/instance.hpp"
#include "effcat/products.hpp"

using namespace effcat;

namespace {

std::vector<InstanceConfig> all_configs() {
  std::vector<InstanceConfig> out;
  for (const char* tag : {"error", "partiality", "state", "list", "multiset", "powerset"}) {
    InstanceConfig cfg;
    cfg.tag = tag;
    if (cfg.tag == "partiality") cfg.e_size = 1;
    out.push_back(cfg);
  }
  return out;
}

std::vector<KMor> khoms(const EffectInstance& inst, const Obj& x, const Obj& y) {
  HomBudget budget;
  KHom hs(inst, x, y, budget);
  std::vector<KMor> out;
  for (std::uint64_t i = 0; i < hs.count(); ++i) out.push_back(hs.at(i));
  return out;
}

}  // namespace

TEST_CASE("pure embedding is functorial and injective") {
  Obj a = Obj::base("A", 2), b = Obj::base("B", 2), c = Obj::base("C", 2);
  HomBudget budget;
  for (const auto& cfg : all_configs()) {
    CAPTURE(cfg.tag);
    InstancePtr inst = build_instance(cfg);
    CHECK(inst->sem(inst->id(a)) == inst->pure_sem(identity(a)));
    HomSet vs(a, b, budget);
    HomSet ws(b, c, budget);
    vs.for_each([&](const FinFun& v) {
      ws.for_each([&](const FinFun& w) {
        SemFun lhs = inst->sem(inst->pure_embed(compose(w, v)));
        SemFun rhs = inst->compose_sem(inst->pure_sem(w), inst->pure_sem(v));
        CHECK(lhs == rhs);
      });
    });
  }
}

TEST_CASE("decode and encode are mutually inverse on carriers") {
  Obj y = Obj::base("Y", 2);
  for (const auto& cfg : all_configs()) {
    CAPTURE(cfg.tag);
    InstancePtr inst = build_instance(cfg);
    Obj carrier = inst->kl_cod(y);
    for (std::uint64_t code = 0; code < carrier.size(); ++code) {
      SemVal v = inst->decode(code, y);
      auto back = inst->encode(v, y);
      REQUIRE(back.has_value());
      CHECK(*back == code);
    }
  }
}

TEST_CASE("consistency against pure morphisms is equality") {
  Obj a = Obj::base("A", 2), b = Obj::base("B", 2);
  HomBudget budget;
  for (const auto& cfg : all_configs()) {
    CAPTURE(cfg.tag);
    InstancePtr inst = build_instance(cfg);
    HomSet vs(a, b, budget);
    vs.for_each([&](const FinFun& v) {
      SemFun jv = inst->pure_sem(v);
      CHECK(inst->same_effect(jv, jv));
      vs.for_each([&](const FinFun& w) {
        CHECK(inst->consistent(jv, w) == (v == w));
      });
    });
  }
}

TEST_CASE("partiality requires a single error point") {
  InstanceConfig cfg;
  cfg.tag = "partiality";
  cfg.e_size = 2;
  CHECK_THROWS_AS(build_instance(cfg), config_error);
}

TEST_CASE("the definedness order on partial maps is a partial order") {
  InstanceConfig cfg;
  cfg.tag = "partiality";
  cfg.e_size = 1;
  InstancePtr inst = build_instance(cfg);
  Obj a = Obj::base("A", 2), b = Obj::base("B", 2);
  auto fs = khoms(*inst, a, b);
  for (const KMor& f : fs) {
    CHECK(partial_leq(*inst, f, f));
    for (const KMor& g : fs) {
      if (partial_leq(*inst, f, g) && partial_leq(*inst, g, f)) CHECK(f == g);
      for (const KMor& h : fs)
        if (partial_leq(*inst, f, g) && partial_leq(*inst, g, h))
          CHECK(partial_leq(*inst, f, h));
    }
  }
}

TEST_CASE("built-in mutants disagree with the genuine instance") {
  InstanceConfig cfg;  // error, |E| = 2
  InstancePtr inst = build_instance(cfg);
  InstancePtr blind = make_mutant_effect_blind(cfg);
  InstancePtr lax = make_mutant_always_consistent(cfg);
  Obj a = Obj::base("A", 2), b = Obj::base("B", 2);
  auto fs = khoms(*inst, a, b);
  HomBudget budget;
  HomSet vs(a, b, budget);
  bool blind_diff = false, lax_diff = false;
  for (const KMor& f : fs) {
    SemFun sf = inst->sem(f);
    for (const KMor& g : fs)
      if (blind->same_effect(sf, inst->sem(g)) != inst->same_effect(sf, inst->sem(g)))
        blind_diff = true;
    vs.for_each([&](const FinFun& v) {
      if (lax->consistent(lax->sem(f), v) != inst->consistent(sf, v)) lax_diff = true;
    });
  }
  CHECK(blind_diff);
  CHECK(lax_diff);
}
