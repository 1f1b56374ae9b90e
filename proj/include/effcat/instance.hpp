#pragma once

// Effect instances over the finite base category.  A morphism of the effect
// category K is represented by its underlying table ("kl"):
//   error/partiality/list/multiset/powerset:  X -> M Y   (carrier object)
//   state:                                    S*X -> S*Y
//
// Relations and composites are evaluated on exact semantic values (SemVal)
// that ignore the representation caps; encoding back into a carrier can fail
// (overflow), which callers must treat as an exclusion, never a truncation.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "effcat/core.hpp"

namespace effcat {

/// Exact semantic value of one output of a kl-table.
/// error: s0=0,s1=value  or s0=1,s1=error id
/// state: s0=next state, s1=value
/// powerset: s0=bitmask of values
/// list: seq=values in order;   multiset: seq=values, sorted, with repeats
struct SemVal {
  std::uint64_t s0 = 0;
  std::uint64_t s1 = 0;
  std::vector<std::uint32_t> seq;

  bool operator==(const SemVal& o) const {
    return s0 == o.s0 && s1 == o.s1 && seq == o.seq;
  }
  bool operator!=(const SemVal& o) const { return !(*this == o); }
};

/// A morphism of K with encodable outputs.
struct KMor {
  Obj dom, cod;  // objects of K (base objects); kl lives on the carriers
  FinFun kl;

  bool operator==(const KMor& o) const {
    return dom == o.dom && cod == o.cod && kl == o.kl;
  }
  bool operator!=(const KMor& o) const { return !(*this == o); }

  json to_json() const;
};

/// A morphism of K with exact semantic outputs (possibly not encodable).
struct SemFun {
  Obj dom, cod;
  std::vector<SemVal> vals;  // indexed by kl-domain codes

  bool operator==(const SemFun& o) const {
    return dom == o.dom && cod == o.cod && vals == o.vals;
  }
  bool operator!=(const SemFun& o) const { return !(*this == o); }
};

struct PureMor {
  FinFun v0;
  KMor mor;
};

struct InstanceConfig {
  std::string tag = "error";   // error|partiality|state|list|multiset|powerset
  std::uint32_t e_size = 2;    // |E| for error
  std::uint32_t s_size = 2;    // |S| for state
  std::uint32_t list_cap = 2;  // max list length
  std::uint32_t mult_cap = 2;  // max multiplicity

  json to_json() const;
  static InstanceConfig from_json(const json& j);
};

class EffectInstance {
 public:
  explicit EffectInstance(InstanceConfig cfg) : cfg_(std::move(cfg)) {}
  virtual ~EffectInstance() = default;

  const InstanceConfig& config() const { return cfg_; }
  const std::string& tag() const { return cfg_.tag; }
  virtual bool monad_backed() const { return false; }

  virtual Obj kl_dom(const Obj& x) const { return x; }
  virtual Obj kl_cod(const Obj& y) const = 0;
  /// Base point of a kl-domain code (x itself, or the x of (s,x)).
  virtual std::uint64_t base_point(std::uint64_t u, const Obj& x) const {
    (void)x;
    return u;
  }

  virtual KMor pure_embed(const FinFun& v0) const = 0;
  KMor id(const Obj& x) const { return pure_embed(identity(x)); }

  // --- semantic kernel -----------------------------------------------------
  virtual SemVal decode(std::uint64_t code, const Obj& y) const = 0;
  virtual std::optional<std::uint64_t> encode(const SemVal& v, const Obj& y) const = 0;
  /// Apply a renaming of value atoms (effect part is preserved).
  virtual SemVal atom_map(const SemVal& v,
                          const std::function<std::uint64_t(std::uint64_t)>& h) const = 0;
  /// Kleisli extension of g applied to one output value.
  virtual SemVal star(const SemFun& g, const SemVal& c) const = 0;

  /// Pointwise kernels of the relations.
  virtual bool cons_sem(const SemVal& c, std::uint64_t y) const = 0;   // against pure value
  virtual bool ext_sem(const SemVal& c, const SemVal& d) const = 0;    // extended, c vs d
  virtual bool lrext_sem(const SemVal& c, const SemVal& d) const = 0;  // common upper bound
  SemVal eff_sem(const SemVal& c) const {
    return atom_map(c, [](std::uint64_t) { return 0; });
  }

  // --- derived operations on (Sem)functions --------------------------------
  SemFun sem(const KMor& f) const;
  std::optional<KMor> reify(const SemFun& f) const;
  SemFun compose_sem(const SemFun& g, const SemFun& f) const;
  std::optional<KMor> compose(const KMor& g, const KMor& f) const;
  SemFun pure_sem(const FinFun& v0) const { return sem(pure_embed(v0)); }

  SemFun effect_sem(const SemFun& f) const;
  SemFun effect_sem(const KMor& f) const { return effect_sem(sem(f)); }
  std::optional<KMor> effect(const KMor& f) const { return reify(effect_sem(f)); }

  virtual bool same_effect(const SemFun& f, const SemFun& g) const;
  bool same_effect(const KMor& f, const KMor& g) const { return same_effect(sem(f), sem(g)); }
  bool consistent(const SemFun& f, const FinFun& v0) const;
  bool consistent(const KMor& f, const FinFun& v0) const { return consistent(sem(f), v0); }
  bool extended_consistent(const SemFun& f, const SemFun& g) const;
  bool extended_consistent(const KMor& f, const KMor& g) const {
    return extended_consistent(sem(f), sem(g));
  }
  /// Left-right consistency: a common pure morphism both are consistent with.
  bool lr_consistent(const SemFun& f, const SemFun& g, const HomBudget& budget) const;
  bool lr_consistent(const KMor& f, const KMor& g, const HomBudget& budget) const {
    return lr_consistent(sem(f), sem(g), budget);
  }
  /// Left-right extended consistency via a common extended upper bound.
  bool lr_extended(const SemFun& f, const SemFun& g) const;

  // --- semi-pure products ---------------------------------------------------
  virtual SemFun semipure_left_s(const FinFun& v0, const SemFun& f) const = 0;   // v |x f
  virtual SemFun semipure_right_s(const SemFun& f, const FinFun& v0) const = 0;  // f x| v
  KMor semipure_left(const FinFun& v0, const KMor& f) const;
  KMor semipure_right(const KMor& f, const FinFun& v0) const;

 protected:
  InstanceConfig cfg_;
};

using InstancePtr = std::shared_ptr<const EffectInstance>;

InstancePtr build_instance(const InstanceConfig& cfg);

/// Monad-backed instances expose the underlying strong monad elementwise.
class MonadInstance : public EffectInstance {
 public:
  using EffectInstance::EffectInstance;

  bool monad_backed() const override { return true; }
  Obj kl_cod(const Obj& y) const override { return carrier_of(y); }
  virtual Obj carrier_of(const Obj& y) const = 0;

  KMor pure_embed(const FinFun& v0) const override;
  virtual SemVal eta_sem(std::uint64_t y) const = 0;
  std::uint64_t eta_code(const Obj& y, std::uint64_t v) const;
  FinFun eta_fun(const Obj& y) const;

  /// mu applied to one element of M(M Y), exactly.
  SemVal mu_sem(const SemVal& outer, const Obj& y) const;
  /// M h applied to one element code, exactly (h a base function).
  SemVal map_sem(const FinFun& h, std::uint64_t code) const {
    return atom_map(decode(code, h.dom), [&](std::uint64_t a) { return h.table[a]; });
  }

  /// Tensorial strength t: Y1 x M Y2 -> M(Y1 x Y2); never overflows.
  virtual FinFun strength(const Obj& y1, const Obj& y2) const;

  SemFun semipure_left_s(const FinFun& v0, const SemFun& f) const override;
  SemFun semipure_right_s(const SemFun& f, const FinFun& v0) const override;

 private:
  // Decoder tables for mu, built once per object (they can be large).
  mutable std::mutex mu_mutex_;
  mutable std::map<std::string, SemFun> mu_decoders_;
};

class StateInstance : public EffectInstance {
 public:
  explicit StateInstance(InstanceConfig cfg);

  Obj state_obj() const { return s_; }
  Obj kl_dom(const Obj& x) const override { return Obj::prod(s_, x); }
  Obj kl_cod(const Obj& y) const override { return Obj::prod(s_, y); }
  std::uint64_t base_point(std::uint64_t u, const Obj& x) const override {
    return u % x.size();
  }

  KMor pure_embed(const FinFun& v0) const override;
  SemVal decode(std::uint64_t code, const Obj& y) const override;
  std::optional<std::uint64_t> encode(const SemVal& v, const Obj& y) const override;
  SemVal atom_map(const SemVal& v,
                  const std::function<std::uint64_t(std::uint64_t)>& h) const override;
  SemVal star(const SemFun& g, const SemVal& c) const override;
  bool cons_sem(const SemVal& c, std::uint64_t y) const override;
  bool ext_sem(const SemVal& c, const SemVal& d) const override;
  bool lrext_sem(const SemVal& c, const SemVal& d) const override;
  SemFun semipure_left_s(const FinFun& v0, const SemFun& f) const override;
  SemFun semipure_right_s(const SemFun& f, const FinFun& v0) const override;

 private:
  Obj s_;
};

/// Partiality: the error instance with a single error, plus the definedness
/// order (f <= g iff g agrees with f wherever f is defined).
bool partial_leq(const EffectInstance& inst, const KMor& f, const KMor& g);

// --- built-in mutants (for suite sensitivity meta-tests) ---------------------

/// Wraps a base instance, making consistency hold everywhere.
InstancePtr make_mutant_always_consistent(const InstanceConfig& cfg);
/// Wraps a base instance, twisting the left semi-pure product's pure leg.
InstancePtr make_mutant_semipure_twist(const InstanceConfig& cfg);
/// Monad-backed only: strength that swaps two outputs of t when possible.
InstancePtr make_mutant_strength_twist(const InstanceConfig& cfg);
/// Extended consistency degraded to strict equality of outputs.
InstancePtr make_mutant_extended_total(const InstanceConfig& cfg);
/// Effect comparison degraded to "always equal".
InstancePtr make_mutant_effect_blind(const InstanceConfig& cfg);

}  // namespace effcat
