#include "effcat/products.hpp"

namespace effcat {

KMor constant_kmor(const EffectInstance& inst, const Obj& x, const Obj& y,
                   std::uint64_t out_code) {
  Obj d = inst.kl_dom(x), c = inst.kl_cod(y);
  if (out_code >= c.size()) throw structural_error("constant_kmor: code out of range");
  return KMor{x, y,
              FinFun(d, c, std::vector<std::uint32_t>(
                               d.size(), static_cast<std::uint32_t>(out_code)))};
}

SemFun sequential_left_s(const EffectInstance& inst, const SemFun& f1, const SemFun& f2) {
  SemFun first = inst.semipure_right_s(f1, identity(f2.dom));
  SemFun second = inst.semipure_left_s(identity(f1.cod), f2);
  return inst.compose_sem(second, first);
}

SemFun sequential_right_s(const EffectInstance& inst, const SemFun& f1, const SemFun& f2) {
  SemFun first = inst.semipure_left_s(identity(f1.dom), f2);
  SemFun second = inst.semipure_right_s(f1, identity(f2.cod));
  return inst.compose_sem(second, first);
}

std::optional<KMor> sequential_left(const EffectInstance& inst, const KMor& f1,
                                    const KMor& f2) {
  return inst.reify(sequential_left_s(inst, inst.sem(f1), inst.sem(f2)));
}

std::optional<KMor> sequential_right(const EffectInstance& inst, const KMor& f1,
                                     const KMor& f2) {
  return inst.reify(sequential_right_s(inst, inst.sem(f1), inst.sem(f2)));
}

SemFun pairing_left_s(const EffectInstance& inst, const SemFun& f1, const SemFun& f2) {
  if (!(f1.dom == f2.dom)) throw structural_error("pairing: domain mismatch");
  FinFun dup = pairing(identity(f1.dom), identity(f1.dom));
  return inst.compose_sem(sequential_left_s(inst, f1, f2), inst.pure_sem(dup));
}

SemFun pairing_right_s(const EffectInstance& inst, const SemFun& f1, const SemFun& f2) {
  if (!(f1.dom == f2.dom)) throw structural_error("pairing: domain mismatch");
  FinFun dup = pairing(identity(f1.dom), identity(f1.dom));
  return inst.compose_sem(sequential_right_s(inst, f1, f2), inst.pure_sem(dup));
}

bool is_central(const EffectInstance& inst, const KMor& k, const std::vector<Obj>& objects,
                const HomBudget& budget) {
  SemFun ks = inst.sem(k);
  for (const Obj& x2 : objects)
    for (const Obj& y2 : objects) {
      KHom homs(inst, x2, y2, budget);
      for (std::uint64_t i = 0; i < homs.count(); ++i) {
        SemFun fs = inst.sem(homs.at(i));
        if (sequential_left_s(inst, ks, fs) != sequential_right_s(inst, ks, fs))
          return false;
      }
    }
  return true;
}

namespace {

struct PairProjections {
  Obj pc;                      // Y1*Y2
  Obj carrier;                 // kl codomain of Y1*Y2
  std::vector<SemVal> q1, q2;  // projected semantics per output code
};

PairProjections pair_projections(const EffectInstance& inst, const Obj& y1, const Obj& y2) {
  PairProjections p;
  p.pc = Obj::prod(y1, y2);
  p.carrier = inst.kl_cod(p.pc);
  p.q1.reserve(p.carrier.size());
  p.q2.reserve(p.carrier.size());
  const std::uint64_t n2 = y2.size();
  for (std::uint64_t c = 0; c < p.carrier.size(); ++c) {
    SemVal v = inst.decode(c, p.pc);
    p.q1.push_back(inst.atom_map(v, [&](std::uint64_t a) { return a / n2; }));
    p.q2.push_back(inst.atom_map(v, [&](std::uint64_t a) { return a % n2; }));
  }
  return p;
}

/// Count tables whose output at every input u lies in an admissible set,
/// saturating at 2; admissible(u, c) must be decidable per output code.
template <class Admissible>
UniqueCount count_pointwise(const Obj& kl_dom, const Obj& carrier, Admissible&& admissible) {
  UniqueCount r;
  r.count = 1;
  std::vector<std::uint32_t> unique_table(kl_dom.size());
  for (std::uint64_t u = 0; u < kl_dom.size(); ++u) {
    std::uint64_t here = 0;
    for (std::uint64_t c = 0; c < carrier.size() && here < 2; ++c) {
      if (admissible(u, c)) {
        if (here == 0) unique_table[u] = static_cast<std::uint32_t>(c);
        ++here;
      }
    }
    if (here == 0) {
      r.count = 0;
      return r;
    }
    if (here >= 2) r.count = 2;
  }
  if (r.count == 1) r.unique_kl = FinFun(kl_dom, carrier, std::move(unique_table));
  return r;
}

}  // namespace

UniqueCount count_semipure_left_candidates(const EffectInstance& inst, const FinFun& v0,
                                           const KMor& f) {
  const Obj& x1 = v0.dom;
  const Obj& x2 = f.dom;
  Obj xp = Obj::prod(x1, x2);
  PairProjections pp = pair_projections(inst, v0.cod, f.cod);
  FinFun vp1 = compose(v0, proj1(x1, x2));
  SemFun rhs2 = inst.compose_sem(inst.sem(f), inst.pure_sem(proj2(x1, x2)));
  Obj d = inst.kl_dom(xp);
  return count_pointwise(d, pp.carrier, [&](std::uint64_t u, std::uint64_t c) {
    return inst.cons_sem(pp.q1[c], vp1.table[inst.base_point(u, xp)]) &&
           pp.q2[c] == rhs2.vals[u];
  });
}

UniqueCount count_semipure_right_candidates(const EffectInstance& inst, const KMor& f,
                                            const FinFun& v0) {
  const Obj& x1 = f.dom;
  const Obj& x2 = v0.dom;
  Obj xp = Obj::prod(x1, x2);
  PairProjections pp = pair_projections(inst, f.cod, v0.cod);
  FinFun vp2 = compose(v0, proj2(x1, x2));
  SemFun rhs1 = inst.compose_sem(inst.sem(f), inst.pure_sem(proj1(x1, x2)));
  Obj d = inst.kl_dom(xp);
  return count_pointwise(d, pp.carrier, [&](std::uint64_t u, std::uint64_t c) {
    return pp.q1[c] == rhs1.vals[u] &&
           inst.cons_sem(pp.q2[c], vp2.table[inst.base_point(u, xp)]);
  });
}

std::optional<UniqueCount> count_sequential_candidates(const EffectInstance& inst,
                                                       const KMor& f1, const KMor& f2) {
  SemFun f1s = inst.sem(f1), f2s = inst.sem(f2);
  SemFun seq = sequential_left_s(inst, f1s, f2s);
  if (!inst.reify(seq)) return std::nullopt;
  const Obj& x1 = f1.dom;
  const Obj& x2 = f2.dom;
  Obj xp = Obj::prod(x1, x2);
  PairProjections pp = pair_projections(inst, f1.cod, f2.cod);
  SemFun rhs1 = inst.compose_sem(f1s, inst.pure_sem(proj1(x1, x2)));
  SemFun mid = inst.semipure_right_s(f1s, identity(x2));  // f1 x) id : X1*X2 -> Y1*X2
  SemFun rhs2 =
      inst.compose_sem(f2s, inst.compose_sem(inst.pure_sem(proj2(f1.cod, x2)), mid));
  Obj d = inst.kl_dom(xp);
  return count_pointwise(d, pp.carrier, [&](std::uint64_t u, std::uint64_t c) {
    return inst.ext_sem(pp.q1[c], rhs1.vals[u]) && pp.q2[c] == rhs2.vals[u];
  });
}

std::optional<std::pair<KMor, KMor>> unicity_violation(const EffectInstance& inst,
                                                       const Obj& x, const Obj& y1,
                                                       const Obj& y2,
                                                       const HomBudget& budget) {
  PairProjections pp = pair_projections(inst, y1, y2);
  Obj xp = Obj::prod(y1, y2);
  Obj d = inst.kl_dom(x);
  HomSet pures(x, y1, budget);
  std::vector<std::uint32_t> fallback(d.size());
  for (std::uint64_t vi = 0; vi < pures.count(); ++vi) {
    FinFun v0 = pures.at(vi);
    bool all_nonempty = true;
    std::optional<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> collision;
    for (std::uint64_t u = 0; u < d.size() && all_nonempty; ++u) {
      std::uint64_t target = v0.table[inst.base_point(u, x)];
      std::uint64_t first = pp.carrier.size();
      for (std::uint64_t c = 0; c < pp.carrier.size(); ++c) {
        if (!inst.cons_sem(pp.q1[c], target)) continue;
        if (first == pp.carrier.size()) {
          first = c;
          fallback[u] = static_cast<std::uint32_t>(c);
        }
        if (!collision) {
          for (std::uint64_t c2 = c + 1; c2 < pp.carrier.size(); ++c2) {
            if (inst.cons_sem(pp.q1[c2], target) && pp.q2[c] == pp.q2[c2]) {
              collision = std::make_tuple(u, c, c2);
              break;
            }
          }
        }
      }
      if (first == pp.carrier.size()) all_nonempty = false;
    }
    if (all_nonempty && collision) {
      auto [u, c, c2] = *collision;
      std::vector<std::uint32_t> t1 = fallback, t2 = fallback;
      t1[u] = static_cast<std::uint32_t>(c);
      t2[u] = static_cast<std::uint32_t>(c2);
      Obj carrier = pp.carrier;
      return std::make_pair(KMor{x, xp, FinFun(d, carrier, std::move(t1))},
                            KMor{x, xp, FinFun(d, carrier, std::move(t2))});
    }
  }
  return std::nullopt;
}

std::optional<std::pair<KMor, KMor>> extended_unicity_violation(const EffectInstance& inst,
                                                                const Obj& x, const Obj& y1,
                                                                const Obj& y2) {
  PairProjections pp = pair_projections(inst, y1, y2);
  Obj xp = Obj::prod(y1, y2);
  Obj d = inst.kl_dom(x);
  for (std::uint64_t c = 0; c < pp.carrier.size(); ++c)
    for (std::uint64_t c2 = c + 1; c2 < pp.carrier.size(); ++c2) {
      if (pp.q2[c] != pp.q2[c2]) continue;
      if (!inst.lrext_sem(pp.q1[c], pp.q1[c2])) continue;
      std::vector<std::uint32_t> t1(d.size(), static_cast<std::uint32_t>(c));
      std::vector<std::uint32_t> t2(d.size(), static_cast<std::uint32_t>(c));
      t2[0] = static_cast<std::uint32_t>(c2);
      return std::make_pair(KMor{x, xp, FinFun(d, pp.carrier, std::move(t1))},
                            KMor{x, xp, FinFun(d, pp.carrier, std::move(t2))});
    }
  return std::nullopt;
}

}  // namespace effcat
