#pragma once

// Sequential products, pairings and centrality on top of the semi-pure
// products supplied by each instance, plus uniqueness searches over hom-sets.
//
// Uniqueness conditions are conjunctions of pointwise constraints on the
// candidate's outputs, so besides direct hom-set enumeration they can be
// decided exactly by counting admissible output codes per input and taking
// the product.  The factorized route is used when the hom-set exceeds the
// budget; both routes are cross-checked in the unit tests.

#include <optional>
#include <utility>

#include "effcat/instance.hpp"

namespace effcat {

/// Enumeration of K(X,Y) in lexicographic order of the underlying tables.
class KHom {
 public:
  KHom(const EffectInstance& inst, const Obj& x, const Obj& y, const HomBudget& budget)
      : x_(x), y_(y), homs_(inst.kl_dom(x), inst.kl_cod(y), budget) {}

  std::uint64_t count() const { return homs_.count(); }
  KMor at(std::uint64_t i) const { return KMor{x_, y_, homs_.at(i)}; }

 private:
  Obj x_, y_;
  HomSet homs_;
};

/// Morphism whose kl-table is constant; used to collapse quantifiers over
/// morphisms that each law evaluates at a single point per case.
KMor constant_kmor(const EffectInstance& inst, const Obj& x, const Obj& y,
                   std::uint64_t out_code);

// f1 (x f2: run f1 first, then f2.   f1 x) f2: run f2 first, then f1.
SemFun sequential_left_s(const EffectInstance& inst, const SemFun& f1, const SemFun& f2);
SemFun sequential_right_s(const EffectInstance& inst, const SemFun& f1, const SemFun& f2);
std::optional<KMor> sequential_left(const EffectInstance& inst, const KMor& f1,
                                    const KMor& f2);
std::optional<KMor> sequential_right(const EffectInstance& inst, const KMor& f1,
                                     const KMor& f2);

// <f1,f2>_l = (f1 (x f2) o <id,id>, and its right-hand twin.
SemFun pairing_left_s(const EffectInstance& inst, const SemFun& f1, const SemFun& f2);
SemFun pairing_right_s(const EffectInstance& inst, const SemFun& f1, const SemFun& f2);

/// k is central iff k (x f = k x) f for every f between objects of the world.
bool is_central(const EffectInstance& inst, const KMor& k, const std::vector<Obj>& objects,
                const HomBudget& budget);

/// Outcome of a uniqueness count: number of satisfying morphisms saturated at
/// 2, plus the unique solution's kl-table when the count is exactly 1.
struct UniqueCount {
  std::uint64_t count = 0;  // saturated at 2
  std::optional<FinFun> unique_kl;
};

/// Count h : X1*X2 -> Y1*Y2 with  q1 o h  cons  v o p1  and  q2 o h = f o p2.
UniqueCount count_semipure_left_candidates(const EffectInstance& inst, const FinFun& v0,
                                           const KMor& f);
UniqueCount count_semipure_right_candidates(const EffectInstance& inst, const KMor& f,
                                            const FinFun& v0);

/// Count h : X1*X2 -> Y1*Y2 satisfying both sequential product conditions
///   q1 o h  ext-cons  f1 o p1   and   q2 o h = f2 o r2 o (f1 x) id).
/// nullopt when the right-hand sides are not representable.
std::optional<UniqueCount> count_sequential_candidates(const EffectInstance& inst,
                                                       const KMor& f1, const KMor& f2);

/// Search for a violation of the unicity condition on K(X, Y1*Y2):
///   q1 o h  lr-cons  q1 o h'  and  q2 o h = q2 o h'  imply  h = h'.
/// Returns a violating pair if one exists.
std::optional<std::pair<KMor, KMor>> unicity_violation(const EffectInstance& inst,
                                                       const Obj& x, const Obj& y1,
                                                       const Obj& y2,
                                                       const HomBudget& budget);

/// Same with the extended relation (lr-extended) in place of lr-cons.
std::optional<std::pair<KMor, KMor>> extended_unicity_violation(const EffectInstance& inst,
                                                                const Obj& x, const Obj& y1,
                                                                const Obj& y2);

}  // namespace effcat
