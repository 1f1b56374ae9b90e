#include "suites.hpp"
#include "suites_util.hpp"

namespace effcat::suites {

namespace {

constexpr std::uint64_t kPairCollapseLimit = 128;

std::vector<KMor> pool(const EffectInstance& inst, const Obj& x, const Obj& y,
                       const HomBudget& b, bool* collapsed) {
  HomBudget local = b;
  local.max_hom_size = std::min<std::uint64_t>(b.max_hom_size, kPairCollapseLimit);
  bool c = false;
  auto out = kmors(inst, x, y, local, true, &c);
  if (collapsed) *collapsed = *collapsed || c;
  return out;
}

/// Tighter pool for laws quantifying three effectful slots at once; each slot
/// is evaluated at a single kl-domain point per case on both sides, so the
/// constant-table collapse stays exact.
std::vector<KMor> tight_pool(const EffectInstance& inst, const Obj& x, const Obj& y,
                             const HomBudget& b, bool* collapsed) {
  HomBudget local = b;
  local.max_hom_size = std::min<std::uint64_t>(b.max_hom_size, 16);
  bool c = false;
  auto out = kmors(inst, x, y, local, true, &c);
  if (collapsed) *collapsed = *collapsed || c;
  return out;
}

void note_collapse(Law& l, bool collapsed) {
  if (collapsed)
    l.note("oversized hom-sets collapsed to constant tables (exact for pointwise laws)");
}

/// Centrality test against a precomputed pool of world morphisms.
class CentralChecker {
 public:
  CentralChecker(const EffectInstance& inst, const std::vector<Obj>& objs, const HomBudget& b)
      : inst_(inst) {
    for (const Obj& x : objs)
      for (const Obj& y : objs)
        for (const KMor& f : kmors(inst, x, y, b, false)) world_.push_back(inst.sem(f));
  }
  bool central(const SemFun& k) const {
    for (const SemFun& sf : world_)
      if (sequential_left_s(inst_, k, sf) != sequential_right_s(inst_, k, sf)) return false;
    return true;
  }

 private:
  const EffectInstance& inst_;
  std::vector<SemFun> world_;
};



/// Fully enumerated morphisms with the centrality flag precomputed, cached
/// per ordered object pair.
class FlaggedHoms {
 public:
  FlaggedHoms(const EffectInstance& inst, const std::vector<Obj>& objs, const HomBudget& b,
              const CentralChecker& checker)
      : inst_(inst), objs_(objs), b_(b), checker_(checker),
        cache_(objs.size() * objs.size()) {}

  const std::vector<std::pair<KMor, bool>>& at(const Obj& x, const Obj& y) {
    std::size_t xi = index_of(x), yi = index_of(y);
    auto& slot = cache_[xi * objs_.size() + yi];
    if (!slot) {
      slot.emplace();
      for (const KMor& k : kmors(inst_, x, y, b_, false))
        slot->emplace_back(k, checker_.central(inst_.sem(k)));
    }
    return *slot;
  }

 private:
  std::size_t index_of(const Obj& o) const {
    for (std::size_t i = 0; i < objs_.size(); ++i)
      if (objs_[i] == o) return i;
    throw structural_error("object not in world");
  }
  const EffectInstance& inst_;
  const std::vector<Obj>& objs_;
  HomBudget b_;
  const CentralChecker& checker_;
  std::vector<std::optional<std::vector<std::pair<KMor, bool>>>> cache_;
};

}  // namespace

void centrality(SuiteCtx& ctx) {
  const EffectInstance& inst = ctx.inst();
  const auto& objs = ctx.objects();
  const HomBudget& b = ctx.budget();
  const std::string tag = inst.tag();
  CentralChecker checker(inst, objs, b);

  // Pure morphisms are central.
  {
    Law& law = ctx.law("thm-3.10-pure-central", "Jv central for every pure v");
    guarded(ctx, law, 1 << 24, [&](Law& l) {
      std::uint64_t i = 0;
      for_object_tuples(objs, 2, [&](const std::vector<Obj>& t) {
        for (const FinFun& v : pure_homs(t[0], t[1], b)) {
          l.check(i++, checker.central(inst.pure_sem(v)), [&] {
            return wit::wrap(wit::rel1("central", wit::pure(v), false),
                             bind({{"v", v.to_json()}}));
          });
        }
      });
    });
  }

  const bool expect_all_central =
      tag == "powerset" || tag == "multiset" || tag == "partiality" ||
      (tag == "error" && inst.config().e_size <= 1);

  if (expect_all_central) {
    Law& law = ctx.law("all-central", "every morphism of this instance is central");
    guarded(ctx, law, 1 << 26, [&](Law& l) {
      std::uint64_t i = 0;
      for_object_tuples(objs, 2, [&](const std::vector<Obj>& t) {
        for (const KMor& k : kmors(inst, t[0], t[1], b, false)) {
          l.check(i++, checker.central(inst.sem(k)), [&] {
            return wit::wrap(wit::rel1("central", wit::mor(k), false),
                             bind({{"k", k.to_json()}}));
          });
        }
      });
    });
  } else {
    Law& law = ctx.law("noncentral-witness", "exists a non-central morphism",
                       LawKind::existence);
    guarded(ctx, law, 1 << 26, [&](Law& l) {
      for (const Obj& x : objs)
        for (const Obj& y : objs)
          for (const KMor& k : kmors(inst, x, y, b, false)) {
            if (!checker.central(inst.sem(k))) {
              l.found(wit::wrap(wit::rel1("central", wit::mor(k), false),
                                bind({{"k", k.to_json()}})));
              return;
            }
          }
    });
  }

  if (tag == "state") {
    Law& law = ctx.law("state-left-right-witness",
                       "exists f1, f2 with f1 (x f2 != f1 x) f2", LawKind::existence);
    guarded(ctx, law, 1 << 24, [&](Law& l) {
      for (const Obj& x1 : objs)
        for (const Obj& x2 : objs)
          for (const KMor& f1 : kmors(inst, x1, x1, b, false)) {
            SemFun s1 = inst.sem(f1);
            for (const KMor& f2 : kmors(inst, x2, x2, b, false)) {
              SemFun s2 = inst.sem(f2);
              if (sequential_left_s(inst, s1, s2) != sequential_right_s(inst, s1, s2)) {
                l.found(wit::wrap(
                    wit::rel("eq", wit::seq_left(wit::mor(f1), wit::mor(f2)),
                             wit::seq_right(wit::mor(f1), wit::mor(f2)), false),
                    bind({{"f1", f1.to_json()}, {"f2", f2.to_json()}})));
                return;
              }
            }
          }
    });
  }
}

void functoriality(SuiteCtx& ctx) {
  const EffectInstance& inst = ctx.inst();
  const auto& objs = ctx.objects();
  const HomBudget& b = ctx.budget();
  CentralChecker checker(inst, objs, b);

  // Identities multiply to the identity.
  {
    Law& law = ctx.law("lem-3.12-id-compose", "id_X (x id_Y = id_(XxY)");
    guarded(ctx, law, 1 << 16, [&](Law& l) {
      std::uint64_t i = 0;
      for_object_tuples(objs, 2, [&](const std::vector<Obj>& t) {
        SemFun lhs = sequential_left_s(inst, inst.pure_sem(identity(t[0])),
                                       inst.pure_sem(identity(t[1])));
        bool ok = lhs == inst.pure_sem(identity(Obj::prod(t[0], t[1])));
        l.check(i++, ok, [&] {
          return wit::wrap(
              wit::rel("eq", wit::seq_left(wit::pure(identity(t[0])), wit::pure(identity(t[1]))),
                       wit::pure(identity(Obj::prod(t[0], t[1]))), false),
              bind({{"X", t[0].to_json()}, {"Y", t[1].to_json()}}));
        });
      });
    });
  }

  // Interchange holds when the crossing morphisms are central.
  {
    Law& law = ctx.law("lem-3.13-central-compose",
                       "(g1 o f1) (x (g2 o f2) = (g1 (x g2) o (f1 (x f2), g1 or f2 central");
    guarded(ctx, law, 1 << 26, [&](Law& l) {
      std::uint64_t i = 0;
      bool collapsed = false;
      FlaggedHoms flagged(inst, objs, b, checker);
      // The non-central slots are evaluated at one kl-domain point per case
      // on both sides, so constant tables are exact; a small cutoff keeps the
      // quantifier space tractable.
      auto small_pool = [&](const Obj& x, const Obj& y) {
        HomBudget local = b;
        local.max_hom_size = std::min<std::uint64_t>(b.max_hom_size, 8);
        bool c = false;
        auto out = kmors(inst, x, y, local, true, &c);
        collapsed = collapsed || c;
        return out;
      };
      // One slot carries the centrality premise and is fully enumerated; the
      // other three are pooled.  Per-slot composites and products are hoisted
      // out of the innermost loop.
      for_object_tuples(objs, 6, [&](const std::vector<Obj>& t) {
        const Obj &x1 = t[0], &y1 = t[1], &z1 = t[2], &x2 = t[3], &y2 = t[4], &z2 = t[5];
        auto sems = [&](const std::vector<KMor>& ms) {
          std::vector<SemFun> out;
          out.reserve(ms.size());
          for (const KMor& m : ms) out.push_back(inst.sem(m));
          return out;
        };
        std::vector<KMor> pf1 = small_pool(x1, y1);
        std::vector<SemFun> sf1 = sems(pf1);

        // Variant A: g1 central (full), f1/f2/g2 pooled.
        {
          std::vector<KMor> pf2 = small_pool(x2, y2);
          std::vector<SemFun> sf2 = sems(pf2);
          std::vector<KMor> pg2 = small_pool(y2, z2);
          std::vector<SemFun> sg2 = sems(pg2);
          std::vector<SemFun> f12(pf1.size() * pf2.size());
          for (std::size_t a = 0; a < pf1.size(); ++a)
            for (std::size_t c = 0; c < pf2.size(); ++c)
              f12[a * pf2.size() + c] = sequential_left_s(inst, sf1[a], sf2[c]);
          std::vector<SemFun> c1(pf1.size()), c2(pf2.size());
          for (const auto& [g1, central] : flagged.at(y1, z1)) {
            if (!central) continue;
            SemFun sg1 = inst.sem(g1);
            for (std::size_t a = 0; a < pf1.size(); ++a)
              c1[a] = inst.compose_sem(sg1, sf1[a]);
            for (std::size_t d = 0; d < pg2.size(); ++d) {
              SemFun big = sequential_left_s(inst, sg1, sg2[d]);
              for (std::size_t c = 0; c < pf2.size(); ++c)
                c2[c] = inst.compose_sem(sg2[d], sf2[c]);
              for (std::size_t a = 0; a < pf1.size(); ++a)
                for (std::size_t c = 0; c < pf2.size(); ++c) {
                  SemFun lhs = sequential_left_s(inst, c1[a], c2[c]);
                  SemFun rhs = inst.compose_sem(big, f12[a * pf2.size() + c]);
                  l.check(i++, lhs == rhs, [&] {
                    return wit::wrap(
                        wit::rel("eq",
                                 wit::seq_left(
                                     wit::compose(wit::mor(g1), wit::mor(pf1[a])),
                                     wit::compose(wit::mor(pg2[d]), wit::mor(pf2[c]))),
                                 wit::compose(
                                     wit::seq_left(wit::mor(g1), wit::mor(pg2[d])),
                                     wit::seq_left(wit::mor(pf1[a]), wit::mor(pf2[c]))),
                                 false),
                        bind({{"f1", pf1[a].to_json()},
                              {"g1", g1.to_json()},
                              {"f2", pf2[c].to_json()},
                              {"g2", pg2[d].to_json()},
                              {"variant", "g1-central"}}));
                  });
                }
            }
          }
        }

        // Variant B: f2 central (full), f1/g1/g2 pooled.
        {
          std::vector<KMor> pg1 = small_pool(y1, z1);
          std::vector<SemFun> sg1 = sems(pg1);
          std::vector<KMor> pg2 = small_pool(y2, z2);
          std::vector<SemFun> sg2 = sems(pg2);
          std::vector<SemFun> c1(pf1.size());
          for (const auto& [f2, central] : flagged.at(x2, y2)) {
            if (!central) continue;
            SemFun sf2 = inst.sem(f2);
            std::vector<SemFun> f12(pf1.size());
            for (std::size_t a = 0; a < pf1.size(); ++a)
              f12[a] = sequential_left_s(inst, sf1[a], sf2);
            for (std::size_t bI = 0; bI < pg1.size(); ++bI) {
              for (std::size_t a = 0; a < pf1.size(); ++a)
                c1[a] = inst.compose_sem(sg1[bI], sf1[a]);
              for (std::size_t d = 0; d < pg2.size(); ++d) {
                SemFun big = sequential_left_s(inst, sg1[bI], sg2[d]);
                SemFun c2 = inst.compose_sem(sg2[d], sf2);
                for (std::size_t a = 0; a < pf1.size(); ++a) {
                  SemFun lhs = sequential_left_s(inst, c1[a], c2);
                  SemFun rhs = inst.compose_sem(big, f12[a]);
                  l.check(i++, lhs == rhs, [&] {
                    return wit::wrap(
                        wit::rel("eq",
                                 wit::seq_left(
                                     wit::compose(wit::mor(pg1[bI]), wit::mor(pf1[a])),
                                     wit::compose(wit::mor(pg2[d]), wit::mor(f2))),
                                 wit::compose(
                                     wit::seq_left(wit::mor(pg1[bI]), wit::mor(pg2[d])),
                                     wit::seq_left(wit::mor(pf1[a]), wit::mor(f2))),
                                 false),
                        bind({{"f1", pf1[a].to_json()},
                              {"g1", pg1[bI].to_json()},
                              {"f2", f2.to_json()},
                              {"g2", pg2[d].to_json()},
                              {"variant", "f2-central"}}));
                  });
                }
              }
            }
          }
        }
      });
      note_collapse(l, collapsed);
    });
  }

  // The central morphisms form a wide subcategory.
  {
    Law& law = ctx.law("thm-3.13p-center-subcategory",
                       "identities are central; central o central is central");
    guarded(ctx, law, 1 << 26, [&](Law& l) {
      std::uint64_t i = 0;
      for (const Obj& x : objs) {
        l.check(i++, checker.central(inst.pure_sem(identity(x))), [&] {
          return wit::wrap(wit::rel1("central", wit::pure(identity(x)), false),
                           bind({{"X", x.to_json()}}));
        });
      }
      FlaggedHoms flagged(inst, objs, b, checker);
      // Many composites share the same semantics; centrality is memoized on
      // the composite's value table.
      std::map<std::vector<std::uint64_t>, bool> memo;
      auto central_memo = [&](const SemFun& h) {
        std::vector<std::uint64_t> key;
        for (const SemVal& v : h.vals) {
          key.push_back(v.s0);
          key.push_back(v.s1);
          key.push_back(v.seq.size());
          for (std::uint32_t s : v.seq) key.push_back(s);
        }
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool c = checker.central(h);
        memo.emplace(std::move(key), c);
        return c;
      };
      for_object_tuples(objs, 3, [&](const std::vector<Obj>& t) {
        memo.clear();  // keys do not include dom/cod
        const auto& fs = flagged.at(t[0], t[1]);
        const auto& gs = flagged.at(t[1], t[2]);
        for (const auto& [f, fc] : fs) {
          if (!fc) continue;
          SemFun sf = inst.sem(f);
          for (const auto& [g, gc] : gs) {
            if (!gc) continue;
            SemFun gf = inst.compose_sem(inst.sem(g), sf);
            l.check(i++, central_memo(gf), [&] {
              return wit::wrap(
                  wit::rel1("central", wit::compose(wit::mor(g), wit::mor(f)), false),
                  bind({{"f", f.to_json()}, {"g", g.to_json()}}));
            });
          }
        }
      });
    });
  }
}

void naturality(SuiteCtx& ctx) {
  const EffectInstance& inst = ctx.inst();
  const auto& objs = ctx.objects();
  const HomBudget& b = ctx.budget();
  const Obj one = Obj::terminal();

  // Unit isomorphisms are natural for the sequential product.
  {
    Law& law = ctx.law("thm-3.15-unit-r", "J(unit_r) o (Jid_1 (x f) = f o J(unit_r)");
    guarded(ctx, law, 1 << 20, [&](Law& l) {
      std::uint64_t i = 0;
      bool collapsed = false;
      for_object_tuples(objs, 2, [&](const std::vector<Obj>& t) {
        for (const KMor& f : pool(inst, t[0], t[1], b, &collapsed)) {
          SemFun sf = inst.sem(f);
          SemFun lhs = inst.compose_sem(
              inst.pure_sem(unit_r(t[1])),
              sequential_left_s(inst, inst.pure_sem(identity(one)), sf));
          SemFun rhs = inst.compose_sem(sf, inst.pure_sem(unit_r(t[0])));
          l.check(i++, lhs == rhs, [&] {
            return wit::wrap(
                wit::rel("eq",
                         wit::compose(wit::pure(unit_r(t[1])),
                                      wit::seq_left(wit::pure(identity(one)), wit::mor(f))),
                         wit::compose(wit::mor(f), wit::pure(unit_r(t[0]))), false),
                bind({{"f", f.to_json()}}));
          });
        }
      });
      note_collapse(l, collapsed);
    });
  }

  {
    Law& law = ctx.law("thm-3.15-unit-l", "J(unit_l) o (f (x Jid_1) = f o J(unit_l)");
    guarded(ctx, law, 1 << 20, [&](Law& l) {
      std::uint64_t i = 0;
      bool collapsed = false;
      for_object_tuples(objs, 2, [&](const std::vector<Obj>& t) {
        for (const KMor& f : pool(inst, t[0], t[1], b, &collapsed)) {
          SemFun sf = inst.sem(f);
          SemFun lhs = inst.compose_sem(
              inst.pure_sem(unit_l(t[1])),
              sequential_left_s(inst, sf, inst.pure_sem(identity(one))));
          SemFun rhs = inst.compose_sem(sf, inst.pure_sem(unit_l(t[0])));
          l.check(i++, lhs == rhs, [&] {
            return wit::wrap(
                wit::rel("eq",
                         wit::compose(wit::pure(unit_l(t[1])),
                                      wit::seq_left(wit::mor(f), wit::pure(identity(one)))),
                         wit::compose(wit::mor(f), wit::pure(unit_l(t[0]))), false),
                bind({{"f", f.to_json()}}));
          });
        }
      });
      note_collapse(l, collapsed);
    });
  }

  // Swapping components exchanges the two semi-pure products.
  {
    Law& law = ctx.law("thm-3.15-swap", "Jswap o (Jv (x f) = (f x) Jv) o Jswap");
    guarded(ctx, law, 1 << 22, [&](Law& l) {
      std::uint64_t i = 0;
      bool collapsed = false;
      for_object_tuples(objs, 4, [&](const std::vector<Obj>& t) {
        const Obj &x1 = t[0], &y1 = t[1], &x2 = t[2], &y2 = t[3];
        for (const FinFun& v : pure_homs(x1, y1, b)) {
          SemFun jv = inst.pure_sem(v);
          for (const KMor& f : pool(inst, x2, y2, b, &collapsed)) {
            SemFun sf = inst.sem(f);
            SemFun lhs = inst.compose_sem(inst.pure_sem(swap_iso(y1, y2)),
                                          sequential_left_s(inst, jv, sf));
            SemFun rhs = inst.compose_sem(sequential_right_s(inst, sf, jv),
                                          inst.pure_sem(swap_iso(x1, x2)));
            l.check(i++, lhs == rhs, [&] {
              return wit::wrap(
                  wit::rel("eq",
                           wit::compose(wit::pure(swap_iso(y1, y2)),
                                        wit::seq_left(wit::pure(v), wit::mor(f))),
                           wit::compose(wit::seq_right(wit::mor(f), wit::pure(v)),
                                        wit::pure(swap_iso(x1, x2))),
                           false),
                  bind({{"v", v.to_json()}, {"f", f.to_json()}}));
            });
          }
        }
      });
      note_collapse(l, collapsed);
    });
  }

  // Associativity of the sequential products modulo the associator.
  {
    Law& law = ctx.law("thm-3.15-assoc-left",
                       "J(assoc) o ((f (x g) (x h) = (f (x (g (x h)) o J(assoc)");
    guarded(ctx, law, 1 << 24, [&](Law& l) {
      std::uint64_t i = 0;
      bool collapsed = false;
      for_object_tuples(objs, 6, [&](const std::vector<Obj>& t) {
        const Obj &x1 = t[0], &y1 = t[1], &x2 = t[2], &y2 = t[3], &x3 = t[4], &y3 = t[5];
        for (const KMor& f : tight_pool(inst, x1, y1, b, &collapsed)) {
          SemFun sf = inst.sem(f);
          for (const KMor& g : tight_pool(inst, x2, y2, b, &collapsed)) {
            SemFun sg = inst.sem(g);
            SemFun fg = sequential_left_s(inst, sf, sg);
            for (const KMor& h : tight_pool(inst, x3, y3, b, &collapsed)) {
              SemFun sh = inst.sem(h);
              SemFun lhs = inst.compose_sem(inst.pure_sem(assoc(y1, y2, y3)),
                                            sequential_left_s(inst, fg, sh));
              SemFun rhs = inst.compose_sem(
                  sequential_left_s(inst, sf, sequential_left_s(inst, sg, sh)),
                  inst.pure_sem(assoc(x1, x2, x3)));
              l.check(i++, lhs == rhs, [&] {
                return wit::wrap(
                    wit::rel("eq",
                             wit::compose(wit::pure(assoc(y1, y2, y3)),
                                          wit::seq_left(wit::seq_left(wit::mor(f), wit::mor(g)),
                                                        wit::mor(h))),
                             wit::compose(wit::seq_left(wit::mor(f),
                                                        wit::seq_left(wit::mor(g), wit::mor(h))),
                                          wit::pure(assoc(x1, x2, x3))),
                             false),
                    bind({{"f", f.to_json()}, {"g", g.to_json()}, {"h", h.to_json()}}));
              });
            }
          }
        }
      });
      note_collapse(l, collapsed);
    });
  }

  {
    Law& law = ctx.law("thm-3.15-assoc-right",
                       "J(assoc) o ((f x) g) x) h) = (f x) (g x) h)) o J(assoc)");
    guarded(ctx, law, 1 << 24, [&](Law& l) {
      std::uint64_t i = 0;
      bool collapsed = false;
      for_object_tuples(objs, 6, [&](const std::vector<Obj>& t) {
        const Obj &x1 = t[0], &y1 = t[1], &x2 = t[2], &y2 = t[3], &x3 = t[4], &y3 = t[5];
        for (const KMor& f : tight_pool(inst, x1, y1, b, &collapsed)) {
          SemFun sf = inst.sem(f);
          for (const KMor& g : tight_pool(inst, x2, y2, b, &collapsed)) {
            SemFun sg = inst.sem(g);
            SemFun fg = sequential_right_s(inst, sf, sg);
            for (const KMor& h : tight_pool(inst, x3, y3, b, &collapsed)) {
              SemFun sh = inst.sem(h);
              SemFun lhs = inst.compose_sem(inst.pure_sem(assoc(y1, y2, y3)),
                                            sequential_right_s(inst, fg, sh));
              SemFun rhs = inst.compose_sem(
                  sequential_right_s(inst, sf, sequential_right_s(inst, sg, sh)),
                  inst.pure_sem(assoc(x1, x2, x3)));
              l.check(i++, lhs == rhs, [&] {
                return wit::wrap(
                    wit::rel("eq",
                             wit::compose(wit::pure(assoc(y1, y2, y3)),
                                          wit::seq_right(wit::seq_right(wit::mor(f), wit::mor(g)),
                                                         wit::mor(h))),
                             wit::compose(
                                 wit::seq_right(wit::mor(f),
                                                wit::seq_right(wit::mor(g), wit::mor(h))),
                                 wit::pure(assoc(x1, x2, x3))),
                             false),
                    bind({{"f", f.to_json()}, {"g", g.to_json()}, {"h", h.to_json()}}));
              });
            }
          }
        }
      });
      note_collapse(l, collapsed);
    });
  }

  // Interchange with pure legs, in the three mixed variants.
  {
    Law& law = ctx.law("lem-3.14-left-interchange",
                       "(Jv (x f) o (Jw (x g) = J(vow) (x (fog)");
    guarded(ctx, law, 1 << 24, [&](Law& l) {
      std::uint64_t i = 0;
      bool collapsed = false;
      for_object_tuples(objs, 6, [&](const std::vector<Obj>& t) {
        const Obj &x1 = t[0], &y1 = t[1], &z1 = t[2], &x2 = t[3], &y2 = t[4], &z2 = t[5];
        for (const FinFun& w : pure_homs(x1, y1, b))
          for (const FinFun& v : pure_homs(y1, z1, b)) {
            FinFun vw = effcat::compose(v, w);
            for (const KMor& g : tight_pool(inst, x2, y2, b, &collapsed)) {
              SemFun sg = inst.sem(g);
              SemFun lo = inst.semipure_left_s(w, sg);
              for (const KMor& f : tight_pool(inst, y2, z2, b, &collapsed)) {
                SemFun sf = inst.sem(f);
                SemFun lhs = inst.compose_sem(inst.semipure_left_s(v, sf), lo);
                SemFun rhs = inst.semipure_left_s(vw, inst.compose_sem(sf, sg));
                l.check(i++, lhs == rhs, [&] {
                  return wit::wrap(
                      wit::rel("eq",
                               wit::compose(wit::semipure_left(v, wit::mor(f)),
                                            wit::semipure_left(w, wit::mor(g))),
                               wit::semipure_left(
                                   vw, wit::compose(wit::mor(f), wit::mor(g))),
                               false),
                      bind({{"v", v.to_json()},
                            {"w", w.to_json()},
                            {"f", f.to_json()},
                            {"g", g.to_json()}}));
                });
              }
            }
          }
      });
      note_collapse(l, collapsed);
    });
  }

  {
    Law& law = ctx.law("lem-3.14-right-interchange",
                       "(f x| Jv) o (g x| Jw) = (fog) x| J(vow)");
    guarded(ctx, law, 1 << 24, [&](Law& l) {
      std::uint64_t i = 0;
      bool collapsed = false;
      for_object_tuples(objs, 6, [&](const std::vector<Obj>& t) {
        const Obj &x1 = t[0], &y1 = t[1], &z1 = t[2], &x2 = t[3], &y2 = t[4], &z2 = t[5];
        for (const FinFun& w : pure_homs(x2, y2, b))
          for (const FinFun& v : pure_homs(y2, z2, b)) {
            FinFun vw = effcat::compose(v, w);
            for (const KMor& g : tight_pool(inst, x1, y1, b, &collapsed)) {
              SemFun sg = inst.sem(g);
              SemFun lo = inst.semipure_right_s(sg, w);
              for (const KMor& f : tight_pool(inst, y1, z1, b, &collapsed)) {
                SemFun sf = inst.sem(f);
                SemFun lhs = inst.compose_sem(inst.semipure_right_s(sf, v), lo);
                SemFun rhs = inst.semipure_right_s(inst.compose_sem(sf, sg), vw);
                l.check(i++, lhs == rhs, [&] {
                  return wit::wrap(
                      wit::rel("eq",
                               wit::compose(wit::semipure_right(wit::mor(f), v),
                                            wit::semipure_right(wit::mor(g), w)),
                               wit::semipure_right(wit::compose(wit::mor(f), wit::mor(g)), vw),
                               false),
                      bind({{"v", v.to_json()},
                            {"w", w.to_json()},
                            {"f", f.to_json()},
                            {"g", g.to_json()}}));
                });
              }
            }
          }
      });
      note_collapse(l, collapsed);
    });
  }

  {
    Law& law = ctx.law("lem-3.14-mixed-interchange",
                       "(f x| Jv) o (Jw (x g) = (foJw) x) (Jvog)");
    guarded(ctx, law, 1 << 24, [&](Law& l) {
      std::uint64_t i = 0;
      bool collapsed = false;
      for_object_tuples(objs, 6, [&](const std::vector<Obj>& t) {
        const Obj &x1 = t[0], &y1 = t[1], &z1 = t[2], &x2 = t[3], &y2 = t[4], &z2 = t[5];
        (void)x1;
        (void)z1;
        for (const FinFun& w : pure_homs(x1, y1, b))
          for (const FinFun& v : pure_homs(y2, z2, b)) {
            for (const KMor& g : tight_pool(inst, x2, y2, b, &collapsed)) {
              SemFun sg = inst.sem(g);
              SemFun lo = inst.semipure_left_s(w, sg);
              SemFun vg = inst.compose_sem(inst.pure_sem(v), sg);
              for (const KMor& f : tight_pool(inst, y1, z1, b, &collapsed)) {
                SemFun sf = inst.sem(f);
                SemFun lhs = inst.compose_sem(inst.semipure_right_s(sf, v), lo);
                SemFun fw = inst.compose_sem(sf, inst.pure_sem(w));
                SemFun rhs = sequential_right_s(inst, fw, vg);
                l.check(i++, lhs == rhs, [&] {
                  return wit::wrap(
                      wit::rel("eq",
                               wit::compose(wit::semipure_right(wit::mor(f), v),
                                            wit::semipure_left(w, wit::mor(g))),
                               wit::seq_right(wit::compose(wit::mor(f), wit::pure(w)),
                                              wit::compose(wit::pure(v), wit::mor(g))),
                               false),
                      bind({{"v", v.to_json()},
                            {"w", w.to_json()},
                            {"f", f.to_json()},
                            {"g", g.to_json()}}));
                });
              }
            }
          }
      });
      note_collapse(l, collapsed);
    });
  }
}

}  // namespace effcat::suites
