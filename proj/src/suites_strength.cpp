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

}  // namespace

void strength_theorem(SuiteCtx& ctx) {
  const auto* m = dynamic_cast<const MonadInstance*>(&ctx.inst());
  if (!m) throw config_error("strength-theorem requires a monad-backed instance");
  const EffectInstance& inst = ctx.inst();
  const auto& objs = ctx.objects();
  const HomBudget& b = ctx.budget();

  // Naturality of the strength in both components.
  {
    Law& law = ctx.law("moggi-strength-naturality", "t o (u x M v) = M(u x v) o t");
    guarded(ctx, law, 1 << 22, [&](Law& l) {
      std::uint64_t i = 0;
      for_object_tuples(objs, 4, [&](const std::vector<Obj>& t) {
        const Obj &a = t[0], &a2 = t[1], &c = t[2], &c2 = t[3];
        FinFun st0 = m->strength(a, c);
        for (const FinFun& u : pure_homs(a, a2, b))
          for (const FinFun& v : pure_homs(c, c2, b)) {
            FinFun uv = product_fun(u, v);
            for (std::uint64_t y1 = 0; y1 < a.size(); ++y1)
              for (std::uint64_t mc = 0; mc < m->carrier_of(c).size(); ++mc) {
                // left route: map v inside, then the strength pairs each atom
                // with the (pure) left value; evaluated exactly, so the
                // intermediate need not fit the capped carrier.
                SemVal mapped = m->map_sem(v, mc);
                std::uint64_t u1 = u(y1);
                SemVal lhs = m->atom_map(mapped, [&](std::uint64_t z) {
                  return pair_code(u1, z, c2.size());
                });
                // right route: strength first, then M(u x v).
                SemVal rhs = m->map_sem(
                    uv, st0(pair_code(y1, mc, m->carrier_of(c).size())));
                l.check(i++, lhs == rhs, [&] {
                  return wit::opaque(bind({{"u", u.to_json()},
                                           {"v", v.to_json()},
                                           {"y1", y1},
                                           {"mc", mc}}));
                });
              }
          }
      });
    });
  }

  // Strength respects the unit isomorphism.
  {
    Law& law = ctx.law("moggi-strength-unit-r", "M(unit_r) o t = unit_r on 1 x MX");
    guarded(ctx, law, 1 << 16, [&](Law& l) {
      std::uint64_t i = 0;
      Obj one = Obj::terminal();
      for (const Obj& x : objs) {
        FinFun st = m->strength(one, x);
        Obj mx = m->carrier_of(x);
        for (std::uint64_t c = 0; c < mx.size(); ++c) {
          SemVal lhs = m->map_sem(unit_r(x), st(pair_code(0, c, mx.size())));
          bool ok = lhs == m->decode(c, x);
          l.check(i++, ok, [&] {
            return wit::opaque(bind({{"object", x.to_json()}, {"code", c}}));
          });
        }
      }
    });
  }

  // Strength respects eta.
  {
    Law& law = ctx.law("moggi-strength-eta", "t o (id x eta) = eta");
    guarded(ctx, law, 1 << 16, [&](Law& l) {
      std::uint64_t i = 0;
      for_object_tuples(objs, 2, [&](const std::vector<Obj>& t) {
        const Obj &a = t[0], &c = t[1];
        FinFun st = m->strength(a, c);
        Obj mc = m->carrier_of(c);
        for (std::uint64_t y1 = 0; y1 < a.size(); ++y1)
          for (std::uint64_t y2 = 0; y2 < c.size(); ++y2) {
            std::uint64_t e = m->eta_code(c, y2);
            SemVal lhs = m->decode(st(pair_code(y1, e, mc.size())), Obj::prod(a, c));
            SemVal rhs = m->eta_sem(pair_code(y1, y2, c.size()));
            l.check(i++, lhs == rhs, [&] {
              return wit::opaque(bind({{"y1", y1}, {"y2", y2}}));
            });
          }
      });
    });
  }

  // Strength respects mu.
  {
    Law& law = ctx.law("moggi-strength-mu", "t o (id x mu) = mu o M(t) o t");
    guarded(ctx, law, 1 << 22, [&](Law& l) {
      std::uint64_t i = 0;
      for_object_tuples(objs, 2, [&](const std::vector<Obj>& t) {
        const Obj &a = t[0], &c = t[1];
        Obj mc = m->carrier_of(c);
        Obj mmc = m->carrier_of(mc);
        Obj ac = Obj::prod(a, c);
        FinFun st = m->strength(a, c);
        // t at (a, M c) as a semantic function for the star-based route.
        SemFun tfun;
        tfun.dom = mc;
        tfun.cod = ac;
        tfun.vals.resize(mc.size());
        for (std::uint64_t y1 = 0; y1 < a.size(); ++y1) {
          for (std::uint64_t z = 0; z < mc.size(); ++z)
            tfun.vals[z] = m->decode(st(pair_code(y1, z, mc.size())), ac);
          for (std::uint64_t zz = 0; zz < mmc.size(); ++zz) {
            SemVal outer = m->decode(zz, mc);
            // left: flatten first, then strength; the flattened element can
            // exceed a representation cap, in which case pair atoms directly.
            SemVal flat = m->mu_sem(outer, c);
            SemVal lhs = m->atom_map(flat, [&](std::uint64_t y2) {
              return pair_code(y1, y2, c.size());
            });
            // right: strength outside, M(strength) inside, then mu; this is
            // exactly star of t over the outer element.
            SemVal rhs = m->star(tfun, outer);
            l.check(i++, lhs == rhs, [&] {
              return wit::opaque(bind({{"y1", y1}, {"outer-code", zz}}));
            });
          }
        }
      });
    });
  }

  // The Kleisli-style product induced by the strength is the semi-pure one.
  {
    Law& law = ctx.law("lem-4.9p-strength-as-kleisli", "v |x f = t o (v x kl f)");
    guarded(ctx, law, 1 << 22, [&](Law& l) {
      std::uint64_t i = 0;
      for_object_tuples(objs, 4, [&](const std::vector<Obj>& t) {
        const Obj &x1 = t[0], &y1 = t[1], &x2 = t[2], &y2 = t[3];
        for (const FinFun& v : pure_homs(x1, y1, b)) {
          for (const KMor& f : kmors(inst, x2, y2, b, false)) {
            FinFun st = m->strength(y1, y2);
            FinFun kl = effcat::compose(st, product_fun(v, f.kl));
            KMor built{Obj::prod(x1, x2), Obj::prod(y1, y2), kl};
            bool ok = inst.sem(built) == inst.semipure_left_s(v, inst.sem(f));
            l.check(i++, ok, [&] {
              return wit::wrap(wit::rel("eq", wit::kleisli_left(v, wit::mor(f)),
                                        wit::semipure_left(v, wit::mor(f)), false),
                               bind({{"v", v.to_json()}, {"f", f.to_json()}}));
            });
          }
        }
      });
    });
  }

  // The strength-induced product satisfies the semi-pure conditions.
  {
    Law& law = ctx.law("thm-4.10-strength-consistency",
                       "q1 o (t o (v x kl f)) cons v o p1;  q2 o (t o (v x kl f)) = f o p2");
    guarded(ctx, law, 1 << 22, [&](Law& l) {
      std::uint64_t i = 0;
      for_object_tuples(objs, 4, [&](const std::vector<Obj>& t) {
        const Obj &x1 = t[0], &y1 = t[1], &x2 = t[2], &y2 = t[3];
        FinFun p1 = proj1(x1, x2), p2 = proj2(x1, x2);
        for (const FinFun& v : pure_homs(x1, y1, b)) {
          for (const KMor& f : kmors(inst, x2, y2, b, false)) {
            FinFun st = m->strength(y1, y2);
            FinFun kl = effcat::compose(st, product_fun(v, f.kl));
            KMor built{Obj::prod(x1, x2), Obj::prod(y1, y2), kl};
            SemFun sb = inst.sem(built);
            bool c1 = inst.consistent(proj_after(inst, sb, y1, y2, false),
                                      effcat::compose(v, p1));
            bool c2 = proj_after(inst, sb, y1, y2, true) ==
                      inst.compose_sem(inst.sem(f), inst.pure_sem(p2));
            l.check(i++, c1 && c2, [&] {
              return wit::wrap(
                  wit::rel("cons",
                           wit::compose(wit::pure(proj1(y1, y2)),
                                        wit::kleisli_left(v, wit::mor(f))),
                           wit::pure(effcat::compose(v, p1)), c1),
                  bind({{"v", v.to_json()},
                        {"f", f.to_json()},
                        {"second-condition", c2}}));
            });
          }
        }
      });
    });
  }

  // Pointwise uniqueness of the strength map itself.
  {
    Law& law = ctx.law("thm-4.10-strength-uniqueness-hypothesis",
                       "t(y1,c) is the unique d with M(q2)(d) = c and q1-part y1");
    guarded(ctx, law, 1 << 22, [&](Law& l) {
      std::uint64_t i = 0;
      for_object_tuples(objs, 2, [&](const std::vector<Obj>& t) {
        const Obj &a = t[0], &c = t[1];
        Obj ac = Obj::prod(a, c);
        Obj mac = m->carrier_of(ac);
        Obj mc = m->carrier_of(c);
        FinFun q1 = proj1(a, c), q2 = proj2(a, c);
        for (std::uint64_t y1 = 0; y1 < a.size(); ++y1)
          for (std::uint64_t z = 0; z < mc.size(); ++z) {
            SemVal target = m->decode(z, c);
            std::uint64_t count = 0;
            for (std::uint64_t d = 0; d < mac.size(); ++d) {
              SemVal dv = m->decode(d, ac);
              if (!(m->atom_map(dv, [&](std::uint64_t p) { return q2(p); }) == target))
                continue;
              if (!m->cons_sem(m->atom_map(dv, [&](std::uint64_t p) { return q1(p); }), y1))
                continue;
              ++count;
              if (count > 1) break;
            }
            l.check(i++, count == 1, [&] {
              return wit::opaque(bind({{"y1", y1}, {"mc-code", z}, {"count", count}}));
            });
          }
      });
    });
  }

  // The right-handed Kleisli product via the costrength matches as well.
  {
    Law& law = ctx.law("defn-4.9-kleisli-equals-semipure",
                       "f x| v = M(swap) o t o swap o (kl f x v)");
    guarded(ctx, law, 1 << 22, [&](Law& l) {
      std::uint64_t i = 0;
      bool collapsed = false;
      for_object_tuples(objs, 4, [&](const std::vector<Obj>& t) {
        const Obj &x1 = t[0], &y1 = t[1], &x2 = t[2], &y2 = t[3];
        for (const FinFun& v : pure_homs(x2, y2, b)) {
          for (const KMor& f : pool(inst, x1, y1, b, &collapsed)) {
            FinFun st = m->strength(y2, y1);  // t : Y2 x M Y1 -> M(Y2 x Y1)
            Obj my1 = m->carrier_of(y1);
            FinFun sw_in = swap_iso(my1, y2);  // M Y1 x Y2 -> Y2 x M Y1
            // M(swap): rename atoms of M(Y2 x Y1) to Y1 x Y2.
            FinFun sw_out = swap_iso(y2, y1);
            FinFun pre = effcat::compose(sw_in, product_fun(f.kl, v));
            FinFun with_t = effcat::compose(st, pre);
            // apply M(swap) elementwise to with_t's outputs.
            Obj m_out = m->carrier_of(Obj::prod(y1, y2));
            std::vector<std::uint32_t> tab(with_t.table.size());
            for (std::size_t u = 0; u < with_t.table.size(); ++u) {
              SemVal sv = m->map_sem(sw_out, with_t.table[u]);
              auto enc = m->encode(sv, Obj::prod(y1, y2));
              if (!enc) throw structural_error("costrength output not encodable");
              tab[u] = static_cast<std::uint32_t>(*enc);
            }
            KMor built{Obj::prod(x1, x2), Obj::prod(y1, y2),
                       FinFun(Obj::prod(x1, x2), m_out, std::move(tab))};
            bool ok = inst.sem(built) == inst.semipure_right_s(inst.sem(f), v);
            l.check(i++, ok, [&] {
              return wit::wrap(wit::rel("eq", wit::mor(built),
                                        wit::semipure_right(wit::mor(f), v), false),
                               bind({{"v", v.to_json()}, {"f", f.to_json()}}));
            });
          }
        }
      });
      (void)collapsed;
    });
  }
}

}  // namespace effcat::suites
