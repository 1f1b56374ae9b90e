#include "effcat/arrows.hpp"

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

void note_collapse(Law& l, bool collapsed) {
  if (collapsed)
    l.note("large hom-sets replaced by constant kl-tables; exact for this law");
}

}  // namespace

void arrow_laws_impl(SuiteCtx& ctx, const ArrowOps& ops) {
  const EffectInstance& inst = ctx.inst();
  const auto& objs = ctx.objects();
  const HomBudget& b = ctx.budget();

  {
    Law& law = ctx.law("law-1-left-identity", "arr id >>> f = f");
    guarded(ctx, law, 1 << 20, [&](Law& l) {
      std::uint64_t i = 0;
      bool collapsed = false;
      for_object_tuples(objs, 2, [&](const std::vector<Obj>& t) {
        for (const KMor& f : pool(inst, t[0], t[1], b, &collapsed)) {
          SemFun fs = inst.sem(f);
          bool ok = ops.then(ops.arr(identity(t[0])), fs) == fs;
          l.check(i++, ok, [&] {
            return wit::wrap(
                wit::rel("eq", wit::compose(wit::mor(f), wit::pure(identity(t[0]))),
                         wit::mor(f), false),
                bind({{"f", f.to_json()}}));
          });
        }
      });
      note_collapse(l, collapsed);
    });
  }

  {
    Law& law = ctx.law("law-2-right-identity", "f >>> arr id = f");
    guarded(ctx, law, 1 << 20, [&](Law& l) {
      std::uint64_t i = 0;
      bool collapsed = false;
      for_object_tuples(objs, 2, [&](const std::vector<Obj>& t) {
        for (const KMor& f : pool(inst, t[0], t[1], b, &collapsed)) {
          SemFun fs = inst.sem(f);
          bool ok = ops.then(fs, ops.arr(identity(t[1]))) == fs;
          l.check(i++, ok, [&] {
            return wit::wrap(
                wit::rel("eq", wit::compose(wit::pure(identity(t[1])), wit::mor(f)),
                         wit::mor(f), false),
                bind({{"f", f.to_json()}}));
          });
        }
      });
      note_collapse(l, collapsed);
    });
  }

  {
    Law& law = ctx.law("law-3-associativity", "(f >>> g) >>> h = f >>> (g >>> h)");
    guarded(ctx, law, 1 << 22, [&](Law& l) {
      std::uint64_t i = 0;
      bool collapsed = false;
      for_object_tuples(objs, 4, [&](const std::vector<Obj>& t) {
        for (const KMor& f : pool(inst, t[0], t[1], b, &collapsed)) {
          SemFun fs = inst.sem(f);
          for (const KMor& g : pool(inst, t[1], t[2], b, &collapsed)) {
            SemFun gs = inst.sem(g);
            for (const KMor& h : pool(inst, t[2], t[3], b, &collapsed)) {
              SemFun hs = inst.sem(h);
              bool ok = ops.then(ops.then(fs, gs), hs) == ops.then(fs, ops.then(gs, hs));
              l.check(i++, ok, [&] {
                return wit::wrap(
                    wit::rel("eq",
                             wit::compose(wit::mor(h),
                                          wit::compose(wit::mor(g), wit::mor(f))),
                             wit::compose(wit::compose(wit::mor(h), wit::mor(g)),
                                          wit::mor(f)),
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
    Law& law = ctx.law("law-4-arr-functor", "arr (w o v) = arr v >>> arr w");
    guarded(ctx, law, 1 << 20, [&](Law& l) {
      std::uint64_t i = 0;
      for_object_tuples(objs, 3, [&](const std::vector<Obj>& t) {
        for (const FinFun& v : pure_homs(t[0], t[1], b))
          for (const FinFun& w : pure_homs(t[1], t[2], b)) {
            bool ok = ops.arr(effcat::compose(w, v)) == ops.then(ops.arr(v), ops.arr(w));
            l.check(i++, ok, [&] {
              return wit::wrap(
                  wit::rel("eq", wit::pure(effcat::compose(w, v)),
                           wit::compose(wit::pure(w), wit::pure(v)), false),
                  bind({{"v", v.to_json()}, {"w", w.to_json()}}));
            });
          }
      });
    });
  }

  {
    Law& law = ctx.law("law-5-first-arr", "first (arr v) = arr (v x id)");
    guarded(ctx, law, 1 << 20, [&](Law& l) {
      std::uint64_t i = 0;
      for_object_tuples(objs, 3, [&](const std::vector<Obj>& t) {
        const Obj& z = t[2];
        for (const FinFun& v : pure_homs(t[0], t[1], b)) {
          bool ok = ops.first(ops.arr(v), z) == ops.arr(product_fun(v, identity(z)));
          l.check(i++, ok, [&] {
            return wit::wrap(
                wit::rel("eq",
                         wit::semipure_right(wit::pure(v), identity(z)),
                         wit::pure(product_fun(v, identity(z))), false),
                bind({{"v", v.to_json()}, {"z", z.to_json()}}));
          });
        }
      });
    });
  }

  {
    Law& law = ctx.law("law-6-first-compose", "first (f >>> g) = first f >>> first g");
    guarded(ctx, law, 1 << 22, [&](Law& l) {
      std::uint64_t i = 0;
      bool collapsed = false;
      for_object_tuples(objs, 4, [&](const std::vector<Obj>& t) {
        const Obj& z = t[3];
        FinFun idz = identity(z);
        for (const KMor& f : pool(inst, t[0], t[1], b, &collapsed)) {
          SemFun fs = inst.sem(f);
          for (const KMor& g : pool(inst, t[1], t[2], b, &collapsed)) {
            SemFun gs = inst.sem(g);
            bool ok = ops.first(ops.then(fs, gs), z) ==
                      ops.then(ops.first(fs, z), ops.first(gs, z));
            l.check(i++, ok, [&] {
              return wit::wrap(
                  wit::rel("eq",
                           wit::semipure_right(
                               wit::compose(wit::mor(g), wit::mor(f)), idz),
                           wit::compose(wit::semipure_right(wit::mor(g), idz),
                                        wit::semipure_right(wit::mor(f), idz)),
                           false),
                  bind({{"f", f.to_json()}, {"g", g.to_json()}, {"z", z.to_json()}}));
            });
          }
        }
      });
      note_collapse(l, collapsed);
    });
  }

  {
    Law& law = ctx.law("law-7-exchange",
                       "first f >>> arr (id x w) = arr (id x w) >>> first f");
    guarded(ctx, law, 1 << 22, [&](Law& l) {
      std::uint64_t i = 0;
      bool collapsed = false;
      for_object_tuples(objs, 4, [&](const std::vector<Obj>& t) {
        const Obj &z = t[2], &z2 = t[3];
        for (const KMor& f : pool(inst, t[0], t[1], b, &collapsed)) {
          SemFun fs = inst.sem(f);
          for (const FinFun& w : pure_homs(z, z2, b)) {
            SemFun lhs = ops.then(ops.first(fs, z),
                                  ops.arr(product_fun(identity(t[1]), w)));
            SemFun rhs = ops.then(ops.arr(product_fun(identity(t[0]), w)),
                                  ops.first(fs, z2));
            l.check(i++, lhs == rhs, [&] {
              return wit::wrap(
                  wit::rel("eq",
                           wit::compose(wit::pure(product_fun(identity(t[1]), w)),
                                        wit::semipure_right(wit::mor(f), identity(z))),
                           wit::compose(wit::semipure_right(wit::mor(f), identity(z2)),
                                        wit::pure(product_fun(identity(t[0]), w))),
                           false),
                  bind({{"f", f.to_json()}, {"w", w.to_json()}}));
            });
          }
        }
      });
      note_collapse(l, collapsed);
    });
  }

  {
    Law& law = ctx.law("law-8-fst", "first f >>> arr p1 = arr p1 >>> f");
    guarded(ctx, law, 1 << 20, [&](Law& l) {
      std::uint64_t i = 0;
      bool collapsed = false;
      for_object_tuples(objs, 3, [&](const std::vector<Obj>& t) {
        const Obj& z = t[2];
        for (const KMor& f : pool(inst, t[0], t[1], b, &collapsed)) {
          SemFun fs = inst.sem(f);
          SemFun lhs = ops.then(ops.first(fs, z), ops.arr(proj1(t[1], z)));
          SemFun rhs = ops.then(ops.arr(proj1(t[0], z)), fs);
          l.check(i++, lhs == rhs, [&] {
            return wit::wrap(
                wit::rel("eq",
                         wit::compose(wit::pure(proj1(t[1], z)),
                                      wit::semipure_right(wit::mor(f), identity(z))),
                         wit::compose(wit::mor(f), wit::pure(proj1(t[0], z))), false),
                bind({{"f", f.to_json()}, {"z", z.to_json()}}));
          });
        }
      });
      note_collapse(l, collapsed);
    });
  }

  {
    Law& law = ctx.law("law-9-assoc",
                       "first (first f) >>> arr assoc = arr assoc >>> first f");
    guarded(ctx, law, 1 << 22, [&](Law& l) {
      std::uint64_t i = 0;
      bool collapsed = false;
      for_object_tuples(objs, 4, [&](const std::vector<Obj>& t) {
        const Obj &z1 = t[2], &z2 = t[3];
        Obj zz = Obj::prod(z1, z2);
        for (const KMor& f : pool(inst, t[0], t[1], b, &collapsed)) {
          SemFun fs = inst.sem(f);
          SemFun lhs = ops.then(ops.first(ops.first(fs, z1), z2),
                                ops.arr(assoc(t[1], z1, z2)));
          SemFun rhs = ops.then(ops.arr(assoc(t[0], z1, z2)), ops.first(fs, zz));
          l.check(i++, lhs == rhs, [&] {
            return wit::wrap(
                wit::rel("eq",
                         wit::compose(
                             wit::pure(assoc(t[1], z1, z2)),
                             wit::semipure_right(
                                 wit::semipure_right(wit::mor(f), identity(z1)),
                                 identity(z2))),
                         wit::compose(wit::semipure_right(wit::mor(f), identity(zz)),
                                      wit::pure(assoc(t[0], z1, z2))),
                         false),
                bind({{"f", f.to_json()}}));
          });
        }
      });
      note_collapse(l, collapsed);
    });
  }

  {
    Law& law = ctx.law("derived-second", "second (arr v) = arr (id x v)");
    guarded(ctx, law, 1 << 18, [&](Law& l) {
      std::uint64_t i = 0;
      for_object_tuples(objs, 3, [&](const std::vector<Obj>& t) {
        const Obj& z = t[2];
        for (const FinFun& v : pure_homs(t[0], t[1], b)) {
          bool ok = ops.second(ops.arr(v), z) == ops.arr(product_fun(identity(z), v));
          l.check(i++, ok, [&] {
            return wit::wrap(
                wit::rel("eq", wit::semipure_left(identity(z), wit::pure(v)),
                         wit::pure(product_fun(identity(z), v)), false),
                bind({{"v", v.to_json()}, {"z", z.to_json()}}));
          });
        }
      });
    });
  }

  {
    Law& law = ctx.law("derived-parallel", "arr v *** arr w = arr (v x w)");
    guarded(ctx, law, 1 << 18, [&](Law& l) {
      std::uint64_t i = 0;
      for_object_tuples(objs, 4, [&](const std::vector<Obj>& t) {
        for (const FinFun& v : pure_homs(t[0], t[1], b))
          for (const FinFun& w : pure_homs(t[2], t[3], b)) {
            bool ok = ops.parallel(ops.arr(v), ops.arr(w)) == ops.arr(product_fun(v, w));
            l.check(i++, ok, [&] {
              return wit::wrap(
                  wit::rel("eq", wit::seq_left(wit::pure(v), wit::pure(w)),
                           wit::pure(product_fun(v, w)), false),
                  bind({{"v", v.to_json()}, {"w", w.to_json()}}));
            });
          }
      });
    });
  }

  {
    Law& law = ctx.law("derived-fanout", "arr v &&& arr w = arr <v, w>");
    guarded(ctx, law, 1 << 18, [&](Law& l) {
      std::uint64_t i = 0;
      for_object_tuples(objs, 3, [&](const std::vector<Obj>& t) {
        for (const FinFun& v : pure_homs(t[0], t[1], b))
          for (const FinFun& w : pure_homs(t[0], t[2], b)) {
            bool ok = ops.fanout(ops.arr(v), ops.arr(w)) == ops.arr(pairing(v, w));
            l.check(i++, ok, [&] {
              return wit::wrap(
                  wit::rel("eq", wit::pairing_left(wit::pure(v), wit::pure(w)),
                           wit::pure(pairing(v, w)), false),
                  bind({{"v", v.to_json()}, {"w", w.to_json()}}));
            });
          }
      });
    });
  }

  {
    Law& law = ctx.law("sec-4.2-fanout-projection-ext", "q1 o (f &&& g) ext f");
    guarded(ctx, law, 1 << 20, [&](Law& l) {
      std::uint64_t i = 0;
      bool collapsed = false;
      for_object_tuples(objs, 3, [&](const std::vector<Obj>& t) {
        for (const KMor& f : pool(inst, t[0], t[1], b, &collapsed)) {
          SemFun fs = inst.sem(f);
          for (const KMor& g : pool(inst, t[0], t[2], b, &collapsed)) {
            SemFun fan = ops.fanout(fs, inst.sem(g));
            bool ok = inst.extended_consistent(
                proj_after(inst, fan, t[1], t[2], false), fs);
            l.check(i++, ok, [&] {
              return wit::wrap(
                  wit::rel("ext",
                           wit::compose(wit::pure(proj1(t[1], t[2])),
                                        wit::pairing_left(wit::mor(f), wit::mor(g))),
                           wit::mor(f), false),
                  bind({{"f", f.to_json()}, {"g", g.to_json()}}));
            });
          }
        }
      });
      note_collapse(l, collapsed);
    });
  }

  {
    Law& law = ctx.law("hughes-fanout-not-product-witness",
                       "exists f, g with q1 o (f &&& g) != f", LawKind::existence);
    guarded(ctx, law, 1 << 20, [&](Law& l) {
      bool done = false;
      bool collapsed = false;
      for_object_tuples(objs, 3, [&](const std::vector<Obj>& t) {
        if (done) return;
        for (const KMor& f : pool(inst, t[0], t[1], b, &collapsed)) {
          if (done) break;
          SemFun fs = inst.sem(f);
          for (const KMor& g : pool(inst, t[0], t[2], b, &collapsed)) {
            SemFun fan = ops.fanout(fs, inst.sem(g));
            if (proj_after(inst, fan, t[1], t[2], false) != fs) {
              l.found(wit::wrap(
                  wit::rel("eq",
                           wit::compose(wit::pure(proj1(t[1], t[2])),
                                        wit::pairing_left(wit::mor(f), wit::mor(g))),
                           wit::mor(f), false),
                  bind({{"f", f.to_json()}, {"g", g.to_json()}})));
              done = true;
              break;
            }
          }
        }
      });
    });
  }
}

void arrow_laws(SuiteCtx& ctx) {
  ArrowOpsPtr ops = make_arrows(ctx.inst());
  arrow_laws_impl(ctx, *ops);
}

}  // namespace effcat::suites
