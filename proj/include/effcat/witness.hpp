#pragma once

// Replayable witnesses.  A failure (or exhibited example) is recorded as a
// small closed expression over recorded morphisms together with the relation
// that was observed and its truth value.  One interpreter re-evaluates any
// such witness against a freshly built instance, so every law shares the same
// replay path.  Decoding validates tables against the instance's carriers and
// throws structural_error when the witness does not fit the configuration.

#include <optional>
#include <string>
#include <vector>

#include "effcat/instance.hpp"

namespace effcat::wit {

// --- expression builders (each returns an expression node) -------------------
json mor(const KMor& m);
json pure(const FinFun& v0);
json compose(json g, json f);
json semipure_left(const FinFun& v0, json f);
json semipure_right(json f, const FinFun& v0);
json seq_left(json f1, json f2);
json seq_right(json f1, json f2);
json pairing_left(json f1, json f2);
json pairing_right(json f1, json f2);
json effect(json f);
/// Kleisli-style product t o (v0 x kl f); monad-backed instances only.
json kleisli_left(const FinFun& v0, json f);

// --- assertion builders -------------------------------------------------------
// rel: eq, cons (rhs must be a `pure` node), ext, lrcons, lrext, same-effect,
//      central (lhs only), results-in (lhs only, with arg).
json rel(const std::string& r, json lhs, json rhs, bool value);
json rel1(const std::string& r, json lhs, bool value,
          std::optional<std::uint64_t> arg = std::nullopt);

/// Final witness object: replayable assertion plus free-form bindings that
/// describe the counterexample for human readers.
json wrap(json replay, json bindings);
/// Non-replayable witness (descriptive only).
json opaque(json bindings);

struct EvalEnv {
  const EffectInstance& inst;
  HomBudget budget;
  std::vector<Obj> objects;  // world, used by the `central` relation
};

SemFun eval_expr(const EvalEnv& env, const json& expr);
/// Evaluates the relation of a replay node; returns its current truth value.
bool eval_rel(const EvalEnv& env, const json& replay);
/// True when the witness is replayable and reproduces the recorded value.
bool replay(const EvalEnv& env, const json& witness);

}  // namespace effcat::wit
