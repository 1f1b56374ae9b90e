#include "effcat/evlogic.hpp"

#include "suites.hpp"
#include "suites_util.hpp"

namespace effcat::suites {

namespace {

/// Set of produced values of a closed computation, as a bitmask over Y.
std::uint64_t result_set(const EffectInstance& inst, const SemFun& c, const Obj& y) {
  std::uint64_t mask = 0;
  for (std::uint64_t a = 0; a < y.size(); ++a)
    if (results_in(inst, c, a)) mask |= std::uint64_t{1} << a;
  return mask;
}

}  // namespace

void evlogic_compare(SuiteCtx& ctx) {
  const EffectInstance& inst = ctx.inst();
  if (!evlogic_supported(inst.tag()))
    throw config_error("evlogic-compare is not defined for instance '" + inst.tag() + "'");
  const auto& objs = ctx.objects();
  const HomBudget& b = ctx.budget();
  const std::string tag = inst.tag();
  const Obj one = Obj::terminal();

  // Relating "c is consistent with the pure value a" to "c results in a".
  const bool cons_forces_termination = (tag == "state");
  if (cons_forces_termination) {
    Law& law = ctx.law("evlogic-cons-implies-termination",
                       "c cons a  =>  c results in a");
    guarded(ctx, law, 1 << 18, [&](Law& l) {
      std::uint64_t i = 0;
      for (const Obj& y : objs) {
        for (const KMor& c : kmors(inst, one, y, b, false)) {
          SemFun cs = inst.sem(c);
          for (std::uint64_t a = 0; a < y.size(); ++a) {
            bool ok = !inst.consistent(cs, global_elem(y, a)) || results_in(inst, cs, a);
            l.check(i++, ok, [&] {
              return wit::wrap(wit::rel1("results-in", wit::mor(c), false, a),
                               bind({{"c", c.to_json()}, {"value", a}}));
            });
          }
        }
      }
    });
  } else {
    Law& law = ctx.law("evlogic-cons-no-termination-witness",
                       "exists c, a with c cons a but not (c results in a)",
                       LawKind::existence);
    guarded(ctx, law, 1 << 18, [&](Law& l) {
      for (const Obj& y : objs) {
        if (l.found_any()) break;
        for (const KMor& c : kmors(inst, one, y, b, false)) {
          if (l.found_any()) break;
          SemFun cs = inst.sem(c);
          for (std::uint64_t a = 0; a < y.size(); ++a) {
            if (inst.consistent(cs, global_elem(y, a)) && !results_in(inst, cs, a)) {
              l.found(wit::wrap(wit::rel1("results-in", wit::mor(c), false, a),
                                bind({{"c", c.to_json()}, {"value", a}})));
              break;
            }
          }
        }
      }
    });
  }

  // The converse direction.
  const bool termination_forces_cons = (tag == "error" || tag == "partiality");
  if (termination_forces_cons) {
    Law& law = ctx.law("evlogic-termination-implies-cons",
                       "c results in a  =>  c cons a");
    guarded(ctx, law, 1 << 18, [&](Law& l) {
      std::uint64_t i = 0;
      for (const Obj& y : objs) {
        for (const KMor& c : kmors(inst, one, y, b, false)) {
          SemFun cs = inst.sem(c);
          for (std::uint64_t a = 0; a < y.size(); ++a) {
            bool ok = !results_in(inst, cs, a) || inst.consistent(cs, global_elem(y, a));
            l.check(i++, ok, [&] {
              return wit::wrap(wit::rel1("results-in", wit::mor(c), true, a),
                               bind({{"c", c.to_json()}, {"value", a}}));
            });
          }
        }
      }
    });
  } else {
    Law& law = ctx.law("evlogic-termination-no-cons-witness",
                       "exists c, a with (c results in a) but not c cons a",
                       LawKind::existence);
    guarded(ctx, law, 1 << 18, [&](Law& l) {
      for (const Obj& y : objs) {
        if (l.found_any()) break;
        for (const KMor& c : kmors(inst, one, y, b, false)) {
          if (l.found_any()) break;
          SemFun cs = inst.sem(c);
          for (std::uint64_t a = 0; a < y.size(); ++a) {
            if (results_in(inst, cs, a) && !inst.consistent(cs, global_elem(y, a))) {
              l.found(wit::wrap(wit::rel1("results-in", wit::mor(c), true, a),
                                bind({{"c", c.to_json()}, {"value", a}})));
              break;
            }
          }
        }
      }
    });
  }

  // Whether effect plus result set pins down a closed computation.
  const bool results_determine = (tag == "error" || tag == "partiality" || tag == "powerset");
  if (results_determine) {
    Law& law = ctx.law("evlogic-results-determine",
                       "c ~ d and equal result sets  =>  c = d");
    guarded(ctx, law, 1 << 20, [&](Law& l) {
      std::uint64_t i = 0;
      for (const Obj& y : objs) {
        auto cs = kmors(inst, one, y, b, false);
        std::vector<SemFun> sems;
        sems.reserve(cs.size());
        for (const KMor& c : cs) sems.push_back(inst.sem(c));
        for (std::size_t p = 0; p < cs.size(); ++p)
          for (std::size_t q = p + 1; q < cs.size(); ++q) {
            bool premise = inst.same_effect(sems[p], sems[q]) &&
                           result_set(inst, sems[p], y) == result_set(inst, sems[q], y);
            bool ok = !premise || sems[p] == sems[q];
            l.check(i++, ok, [&] {
              return wit::wrap(
                  wit::rel("eq", wit::mor(cs[p]), wit::mor(cs[q]), false),
                  bind({{"c", cs[p].to_json()}, {"d", cs[q].to_json()}}));
            });
          }
      }
    });
  } else {
    Law& law = ctx.law("evlogic-results-underdetermine-witness",
                       "exists c != d with c ~ d and equal result sets",
                       LawKind::existence);
    guarded(ctx, law, 1 << 20, [&](Law& l) {
      for (const Obj& y : objs) {
        if (l.found_any()) break;
        auto cs = kmors(inst, one, y, b, false);
        std::vector<SemFun> sems;
        sems.reserve(cs.size());
        for (const KMor& c : cs) sems.push_back(inst.sem(c));
        for (std::size_t p = 0; p < cs.size() && !l.found_any(); ++p)
          for (std::size_t q = p + 1; q < cs.size(); ++q) {
            if (sems[p] != sems[q] && inst.same_effect(sems[p], sems[q]) &&
                result_set(inst, sems[p], y) == result_set(inst, sems[q], y)) {
              l.found(wit::wrap(
                  wit::rel("same-effect", wit::mor(cs[p]), wit::mor(cs[q]), true),
                  bind({{"c", cs[p].to_json()},
                        {"d", cs[q].to_json()},
                        {"result-set", result_set(inst, sems[p], y)}})));
              break;
            }
          }
      }
    });
  }
}

}  // namespace effcat::suites
