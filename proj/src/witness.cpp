#include "effcat/witness.hpp"

#include "effcat/evlogic.hpp"
#include "effcat/products.hpp"

namespace effcat::wit {

json mor(const KMor& m) { return json{{"op", "mor"}, {"m", m.to_json()}}; }

json pure(const FinFun& v0) { return json{{"op", "pure"}, {"v", v0.to_json()}}; }

json compose(json g, json f) {
  return json{{"op", "compose"}, {"g", std::move(g)}, {"f", std::move(f)}};
}

json semipure_left(const FinFun& v0, json f) {
  return json{{"op", "semipure-left"}, {"v", v0.to_json()}, {"f", std::move(f)}};
}

json semipure_right(json f, const FinFun& v0) {
  return json{{"op", "semipure-right"}, {"f", std::move(f)}, {"v", v0.to_json()}};
}

json seq_left(json f1, json f2) {
  return json{{"op", "seq-left"}, {"f1", std::move(f1)}, {"f2", std::move(f2)}};
}

json seq_right(json f1, json f2) {
  return json{{"op", "seq-right"}, {"f1", std::move(f1)}, {"f2", std::move(f2)}};
}

json pairing_left(json f1, json f2) {
  return json{{"op", "pairing-left"}, {"f1", std::move(f1)}, {"f2", std::move(f2)}};
}

json pairing_right(json f1, json f2) {
  return json{{"op", "pairing-right"}, {"f1", std::move(f1)}, {"f2", std::move(f2)}};
}

json effect(json f) { return json{{"op", "effect"}, {"f", std::move(f)}}; }

json kleisli_left(const FinFun& v0, json f) {
  return json{{"op", "kleisli-left"}, {"v", v0.to_json()}, {"f", std::move(f)}};
}

json rel(const std::string& r, json lhs, json rhs, bool value) {
  return json{{"rel", r}, {"lhs", std::move(lhs)}, {"rhs", std::move(rhs)}, {"value", value}};
}

json rel1(const std::string& r, json lhs, bool value, std::optional<std::uint64_t> arg) {
  json j{{"rel", r}, {"lhs", std::move(lhs)}, {"value", value}};
  if (arg) j["arg"] = *arg;
  return j;
}

json wrap(json replay, json bindings) {
  return json{{"replay", std::move(replay)}, {"bindings", std::move(bindings)}};
}

json opaque(json bindings) {
  return json{{"replay", nullptr}, {"bindings", std::move(bindings)}};
}

namespace {

KMor decode_mor(const EvalEnv& env, const json& j) {
  KMor m{Obj::from_json(j.at("dom")), Obj::from_json(j.at("cod")),
         FinFun::from_json(j.at("kl"))};
  const auto& inst = env.inst;
  if (m.kl.dom != inst.kl_dom(m.dom) || m.kl.cod != inst.kl_cod(m.cod))
    throw structural_error("witness morphism does not fit the configured instance");
  return m;
}

FinFun decode_pure(const json& j) { return FinFun::from_json(j); }

}  // namespace

SemFun eval_expr(const EvalEnv& env, const json& expr) {
  const auto& inst = env.inst;
  const std::string op = expr.at("op").get<std::string>();
  if (op == "mor") return inst.sem(decode_mor(env, expr.at("m")));
  if (op == "pure") return inst.pure_sem(decode_pure(expr.at("v")));
  if (op == "compose")
    return inst.compose_sem(eval_expr(env, expr.at("g")), eval_expr(env, expr.at("f")));
  if (op == "semipure-left")
    return inst.semipure_left_s(decode_pure(expr.at("v")), eval_expr(env, expr.at("f")));
  if (op == "semipure-right")
    return inst.semipure_right_s(eval_expr(env, expr.at("f")), decode_pure(expr.at("v")));
  if (op == "seq-left")
    return sequential_left_s(inst, eval_expr(env, expr.at("f1")), eval_expr(env, expr.at("f2")));
  if (op == "seq-right")
    return sequential_right_s(inst, eval_expr(env, expr.at("f1")),
                              eval_expr(env, expr.at("f2")));
  if (op == "pairing-left")
    return pairing_left_s(inst, eval_expr(env, expr.at("f1")), eval_expr(env, expr.at("f2")));
  if (op == "pairing-right")
    return pairing_right_s(inst, eval_expr(env, expr.at("f1")), eval_expr(env, expr.at("f2")));
  if (op == "effect") return inst.effect_sem(eval_expr(env, expr.at("f")));
  if (op == "kleisli-left") {
    const auto* m = dynamic_cast<const MonadInstance*>(&inst);
    if (!m) throw structural_error("kleisli-left witness requires a monad-backed instance");
    FinFun v0 = decode_pure(expr.at("v"));
    SemFun f = eval_expr(env, expr.at("f"));
    std::optional<KMor> fk = inst.reify(f);
    if (!fk) throw structural_error("kleisli-left witness: inner morphism not encodable");
    // t o (v0 x kl f) : X1*X2 -> M(Y1*Y2)
    FinFun t = m->strength(v0.cod, fk->cod);
    FinFun lhs = effcat::compose(t, product_fun(v0, fk->kl));
    KMor out{Obj::prod(v0.dom, fk->dom), Obj::prod(v0.cod, fk->cod), lhs};
    return inst.sem(out);
  }
  throw structural_error("unknown witness expression op: " + op);
}

bool eval_rel(const EvalEnv& env, const json& replay) {
  const auto& inst = env.inst;
  const std::string r = replay.at("rel").get<std::string>();
  SemFun lhs = eval_expr(env, replay.at("lhs"));
  if (r == "central") {
    std::optional<KMor> k = inst.reify(lhs);
    if (!k) throw structural_error("central witness: morphism not encodable");
    return is_central(inst, *k, env.objects, env.budget);
  }
  if (r == "results-in")
    return results_in(inst, lhs, replay.at("arg").get<std::uint64_t>());
  if (r == "cons") {
    const json& rhs = replay.at("rhs");
    if (rhs.at("op") != "pure") throw structural_error("cons witness: rhs must be pure");
    return inst.consistent(lhs, decode_pure(rhs.at("v")));
  }
  SemFun rhs = eval_expr(env, replay.at("rhs"));
  if (r == "eq") return lhs == rhs;
  if (r == "ext") return inst.extended_consistent(lhs, rhs);
  if (r == "lrcons") return inst.lr_consistent(lhs, rhs, env.budget);
  if (r == "lrext") return inst.lr_extended(lhs, rhs);
  if (r == "same-effect") return inst.same_effect(lhs, rhs);
  throw structural_error("unknown witness relation: " + r);
}

bool replay(const EvalEnv& env, const json& witness) {
  if (!witness.is_object() || !witness.contains("replay") || witness.at("replay").is_null())
    throw config_error("witness is not replayable");
  const json& rp = witness.at("replay");
  return eval_rel(env, rp) == rp.at("value").get<bool>();
}

}  // namespace effcat::wit
