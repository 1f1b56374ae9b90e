#pragma once

// Shared helpers for the suite implementations.

#include <vector>

#include "effcat/lawsuite.hpp"
#include "effcat/products.hpp"
#include "effcat/witness.hpp"

namespace effcat::suites {

/// All pure morphisms X -> Y of the base category.
inline std::vector<FinFun> pure_homs(const Obj& x, const Obj& y, const HomBudget& b) {
  HomSet hs(x, y, b);
  std::vector<FinFun> out;
  out.reserve(hs.count());
  hs.for_each([&](const FinFun& f) { out.push_back(f); });
  return out;
}

/// All morphisms of K(X,Y); when the hom-set exceeds the budget and
/// `allow_collapse` is set, returns the constant-table morphisms instead
/// (exact for laws that evaluate the morphism at a single point per case).
inline std::vector<KMor> kmors(const EffectInstance& inst, const Obj& x, const Obj& y,
                               const HomBudget& b, bool allow_collapse,
                               bool* collapsed = nullptr) {
  if (collapsed) *collapsed = false;
  auto n = HomSet::size_of(inst.kl_dom(x), inst.kl_cod(y));
  if (n && *n <= b.max_hom_size) {
    KHom hs(inst, x, y, b);
    std::vector<KMor> out;
    out.reserve(hs.count());
    for (std::uint64_t i = 0; i < hs.count(); ++i) out.push_back(hs.at(i));
    return out;
  }
  if (!allow_collapse)
    throw budget_error("hom-set exceeds the budget", n.value_or(~std::uint64_t{0}));
  if (collapsed) *collapsed = true;
  std::vector<KMor> out;
  const std::uint64_t c = inst.kl_cod(y).size();
  out.reserve(c);
  for (std::uint64_t v = 0; v < c; ++v) out.push_back(constant_kmor(inst, x, y, v));
  return out;
}

/// Runs a law body, converting budget overruns into incomplete verdicts.
template <class F>
void guarded(SuiteCtx& ctx, Law& law, std::uint64_t planned, F&& body) {
  if (!ctx.charge(law, planned)) return;
  try {
    body(law);
  } catch (const budget_error& e) {
    law.incomplete(e.required);
  }
}

/// Every (ordered) choice of `k` objects from the world.
template <class F>
void for_object_tuples(const std::vector<Obj>& objs, unsigned k, F&& f) {
  std::vector<Obj> tuple(k);
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    for (unsigned i = 0; i < k; ++i) tuple[i] = objs[idx[i]];
    f(tuple);
    unsigned i = 0;
    for (; i < k; ++i) {
      if (++idx[i] < objs.size()) break;
      idx[i] = 0;
    }
    if (i == k) return;
  }
}

inline json bind(std::initializer_list<std::pair<const char*, json>> kv) {
  json j = json::object();
  for (auto& [k, v] : kv) j[k] = v;
  return j;
}

/// q1 o h and q2 o h for h into Y1*Y2, as semantic functions.
inline SemFun proj_after(const EffectInstance& inst, const SemFun& h, const Obj& y1,
                         const Obj& y2, bool second) {
  FinFun p = second ? proj2(y1, y2) : proj1(y1, y2);
  return inst.compose_sem(inst.pure_sem(p), h);
}

}  // namespace effcat::suites
