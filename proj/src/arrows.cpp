#include "effcat/arrows.hpp"

namespace effcat {

SemFun ArrowOps::second(const SemFun& f, const Obj& z) const {
  SemFun s1 = arr(swap_iso(z, f.dom));
  SemFun s2 = arr(swap_iso(f.cod, z));
  return then(then(s1, first(f, z)), s2);
}

SemFun ArrowOps::parallel(const SemFun& f, const SemFun& g) const {
  return then(first(f, g.dom), second(g, f.cod));
}

SemFun ArrowOps::fanout(const SemFun& f, const SemFun& g) const {
  FinFun dup = pairing(identity(f.dom), identity(f.dom));
  return then(arr(dup), parallel(f, g));
}

namespace {

// Involution on element codes of X: swaps 0 and 1 when |X| >= 2.
FinFun involute01(const Obj& x) {
  std::vector<std::uint32_t> t(x.size());
  for (std::uint64_t i = 0; i < x.size(); ++i) t[i] = static_cast<std::uint32_t>(i);
  if (x.size() >= 2) std::swap(t[0], t[1]);
  return FinFun(x, x, std::move(t));
}

class MutantArr : public ArrowOps {
 public:
  using ArrowOps::ArrowOps;
  SemFun arr(const FinFun& v0) const override {
    return inst().pure_sem(effcat::compose(v0, involute01(v0.dom)));
  }
};

class MutantThen : public ArrowOps {
 public:
  using ArrowOps::ArrowOps;
  SemFun then(const SemFun& f, const SemFun& g) const override {
    SemFun zeroed = inst().compose_sem(f, inst().pure_sem(constant(f.dom, f.dom, 0)));
    return inst().compose_sem(g, zeroed);
  }
};

class MutantFirstX : public ArrowOps {
 public:
  using ArrowOps::ArrowOps;
  SemFun first(const SemFun& f, const Obj& z) const override {
    SemFun pre = inst().pure_sem(product_fun(involute01(f.dom), identity(z)));
    return inst().compose_sem(inst().semipure_right_s(f, identity(z)), pre);
  }
};

class MutantFirstZ : public ArrowOps {
 public:
  using ArrowOps::ArrowOps;
  SemFun first(const SemFun& f, const Obj& z) const override {
    SemFun post = inst().pure_sem(product_fun(identity(f.cod), involute01(z)));
    return inst().compose_sem(post, inst().semipure_right_s(f, identity(z)));
  }
};

}  // namespace

ArrowOpsPtr make_arrows(const EffectInstance& inst) {
  return std::make_unique<ArrowOps>(inst);
}
ArrowOpsPtr make_arrows_mutant_arr(const EffectInstance& inst) {
  return std::make_unique<MutantArr>(inst);
}
ArrowOpsPtr make_arrows_mutant_then(const EffectInstance& inst) {
  return std::make_unique<MutantThen>(inst);
}
ArrowOpsPtr make_arrows_mutant_first_x(const EffectInstance& inst) {
  return std::make_unique<MutantFirstX>(inst);
}
ArrowOpsPtr make_arrows_mutant_first_z(const EffectInstance& inst) {
  return std::make_unique<MutantFirstZ>(inst);
}

}  // namespace effcat
