#pragma once

// Arrow-style combinators on top of an instance:
//   arr v        embeds a pure function
//   then (>>>)   composition in diagrammatic order
//   first        pairs a computation with an inert right component
// second / parallel (***) / fanout (&&&) are derived in the standard way.
// Mutated variants deliberately violate individual Arrow laws; the law suite
// must flag each of them.

#include <memory>

#include "effcat/instance.hpp"

namespace effcat {

class ArrowOps {
 public:
  explicit ArrowOps(const EffectInstance& inst) : inst_(inst) {}
  virtual ~ArrowOps() = default;

  const EffectInstance& inst() const { return inst_; }

  virtual SemFun arr(const FinFun& v0) const { return inst_.pure_sem(v0); }
  virtual SemFun then(const SemFun& f, const SemFun& g) const {  // f >>> g
    return inst_.compose_sem(g, f);
  }
  virtual SemFun first(const SemFun& f, const Obj& z) const {
    return inst_.semipure_right_s(f, identity(z));
  }

  SemFun second(const SemFun& f, const Obj& z) const;
  SemFun parallel(const SemFun& f, const SemFun& g) const;  // f *** g
  SemFun fanout(const SemFun& f, const SemFun& g) const;    // f &&& g

 private:
  const EffectInstance& inst_;
};

using ArrowOpsPtr = std::unique_ptr<const ArrowOps>;

ArrowOpsPtr make_arrows(const EffectInstance& inst);
/// arr embeds v0 pre-composed with an involution: breaks identity/homomorphism laws.
ArrowOpsPtr make_arrows_mutant_arr(const EffectInstance& inst);
/// then discards f's input dependence: breaks associativity.
ArrowOpsPtr make_arrows_mutant_then(const EffectInstance& inst);
/// first twists the X component before running f: breaks the first laws.
ArrowOpsPtr make_arrows_mutant_first_x(const EffectInstance& inst);
/// first twists the inert Z component afterwards: breaks the exchange laws.
ArrowOpsPtr make_arrows_mutant_first_z(const EffectInstance& inst);

}  // namespace effcat
