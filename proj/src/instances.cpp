#include "effcat/instance.hpp"

#include <algorithm>

namespace effcat {

json KMor::to_json() const {
  return json{{"dom", dom.to_json()}, {"cod", cod.to_json()}, {"kl", kl.to_json()}};
}

json InstanceConfig::to_json() const {
  return json{{"tag", tag}, {"E", e_size}, {"S", s_size}, {"L", list_cap}, {"M", mult_cap}};
}

InstanceConfig InstanceConfig::from_json(const json& j) {
  InstanceConfig c;
  c.tag = j.at("tag").get<std::string>();
  if (j.contains("E")) c.e_size = j.at("E").get<std::uint32_t>();
  if (j.contains("S")) c.s_size = j.at("S").get<std::uint32_t>();
  if (j.contains("L")) c.list_cap = j.at("L").get<std::uint32_t>();
  if (j.contains("M")) c.mult_cap = j.at("M").get<std::uint32_t>();
  return c;
}

// --- derived operations ------------------------------------------------------

SemFun EffectInstance::sem(const KMor& f) const {
  SemFun s{f.dom, f.cod, {}};
  s.vals.reserve(f.kl.table.size());
  for (auto c : f.kl.table) s.vals.push_back(decode(c, f.cod));
  return s;
}

std::optional<KMor> EffectInstance::reify(const SemFun& f) const {
  std::vector<std::uint32_t> t;
  t.reserve(f.vals.size());
  for (const auto& v : f.vals) {
    auto c = encode(v, f.cod);
    if (!c) return std::nullopt;
    t.push_back(static_cast<std::uint32_t>(*c));
  }
  return KMor{f.dom, f.cod, FinFun(kl_dom(f.dom), kl_cod(f.cod), std::move(t))};
}

SemFun EffectInstance::compose_sem(const SemFun& g, const SemFun& f) const {
  if (!(f.cod == g.dom)) throw structural_error("compose_sem: cod/dom mismatch");
  SemFun r{f.dom, g.cod, {}};
  r.vals.reserve(f.vals.size());
  for (const auto& c : f.vals) r.vals.push_back(star(g, c));
  return r;
}

std::optional<KMor> EffectInstance::compose(const KMor& g, const KMor& f) const {
  return reify(compose_sem(sem(g), sem(f)));
}

SemFun EffectInstance::effect_sem(const SemFun& f) const {
  SemFun r{f.dom, Obj::terminal(), {}};
  r.vals.reserve(f.vals.size());
  for (const auto& c : f.vals) r.vals.push_back(eff_sem(c));
  return r;
}

bool EffectInstance::same_effect(const SemFun& f, const SemFun& g) const {
  if (!(f.dom == g.dom)) throw structural_error("same_effect: domain mismatch");
  for (std::size_t u = 0; u < f.vals.size(); ++u)
    if (eff_sem(f.vals[u]) != eff_sem(g.vals[u])) return false;
  return true;
}

bool EffectInstance::consistent(const SemFun& f, const FinFun& v0) const {
  if (!(f.dom == v0.dom && f.cod == v0.cod))
    throw structural_error("consistent: morphisms not parallel");
  for (std::size_t u = 0; u < f.vals.size(); ++u)
    if (!cons_sem(f.vals[u], v0.table[base_point(u, f.dom)])) return false;
  return true;
}

bool EffectInstance::extended_consistent(const SemFun& f, const SemFun& g) const {
  if (!(f.dom == g.dom && f.cod == g.cod))
    throw structural_error("extended_consistent: morphisms not parallel");
  for (std::size_t u = 0; u < f.vals.size(); ++u)
    if (!ext_sem(f.vals[u], g.vals[u])) return false;
  return true;
}

bool EffectInstance::lr_consistent(const SemFun& f, const SemFun& g,
                                   const HomBudget& budget) const {
  if (!(f.dom == g.dom && f.cod == g.cod))
    throw structural_error("lr_consistent: morphisms not parallel");
  HomSet cands(f.dom, f.cod, budget);
  for (std::uint64_t i = 0; i < cands.count(); ++i) {
    FinFun v0 = cands.at(i);
    if (consistent(f, v0) && consistent(g, v0)) return true;
  }
  return false;
}

bool EffectInstance::lr_extended(const SemFun& f, const SemFun& g) const {
  if (!(f.dom == g.dom && f.cod == g.cod))
    throw structural_error("lr_extended: morphisms not parallel");
  for (std::size_t u = 0; u < f.vals.size(); ++u)
    if (!lrext_sem(f.vals[u], g.vals[u])) return false;
  return true;
}

KMor EffectInstance::semipure_left(const FinFun& v0, const KMor& f) const {
  auto r = reify(semipure_left_s(v0, sem(f)));
  if (!r) throw structural_error("semi-pure product failed to encode");
  return *r;
}

KMor EffectInstance::semipure_right(const KMor& f, const FinFun& v0) const {
  auto r = reify(semipure_right_s(sem(f), v0));
  if (!r) throw structural_error("semi-pure product failed to encode");
  return *r;
}

// --- monad-backed common layer -----------------------------------------------

KMor MonadInstance::pure_embed(const FinFun& v0) const {
  std::vector<std::uint32_t> t(v0.table.size());
  for (std::size_t x = 0; x < t.size(); ++x)
    t[x] = static_cast<std::uint32_t>(eta_code(v0.cod, v0.table[x]));
  return KMor{v0.dom, v0.cod, FinFun(v0.dom, carrier_of(v0.cod), std::move(t))};
}

std::uint64_t MonadInstance::eta_code(const Obj& y, std::uint64_t v) const {
  auto c = encode(eta_sem(v), y);
  if (!c) throw structural_error("monad unit not representable");
  return *c;
}

FinFun MonadInstance::eta_fun(const Obj& y) const {
  std::vector<std::uint32_t> t(y.size());
  for (std::uint64_t v = 0; v < y.size(); ++v)
    t[v] = static_cast<std::uint32_t>(eta_code(y, v));
  return FinFun(y, carrier_of(y), std::move(t));
}

SemVal MonadInstance::mu_sem(const SemVal& outer, const Obj& y) const {
  std::lock_guard<std::mutex> lock(mu_mutex_);
  auto it = mu_decoders_.find(y.str());
  if (it == mu_decoders_.end()) {
    Obj my = carrier_of(y);
    SemFun idm{my, y, {}};
    idm.vals.reserve(my.size());
    for (std::uint64_t m = 0; m < my.size(); ++m) idm.vals.push_back(decode(m, y));
    it = mu_decoders_.emplace(y.str(), std::move(idm)).first;
  }
  return star(it->second, outer);
}

FinFun MonadInstance::strength(const Obj& y1, const Obj& y2) const {
  Obj dom = Obj::prod(y1, carrier_of(y2));
  Obj pc = Obj::prod(y1, y2);
  Obj cod = carrier_of(pc);
  std::vector<std::uint32_t> t(dom.size());
  for (std::uint64_t a = 0; a < y1.size(); ++a)
    for (std::uint64_t c = 0; c < carrier_of(y2).size(); ++c) {
      SemVal v = atom_map(decode(c, y2),
                          [&](std::uint64_t z) { return pair_code(a, z, y2.size()); });
      auto code = encode(v, pc);
      if (!code) throw structural_error("strength not representable");
      t[pair_code(a, c, carrier_of(y2).size())] = static_cast<std::uint32_t>(*code);
    }
  return FinFun(dom, cod, std::move(t));
}

SemFun MonadInstance::semipure_left_s(const FinFun& v0, const SemFun& f) const {
  const Obj& x1 = v0.dom;
  const Obj& x2 = f.dom;
  const std::uint64_t y2n = f.cod.size();
  SemFun r{Obj::prod(x1, x2), Obj::prod(v0.cod, f.cod), {}};
  r.vals.reserve(x1.size() * x2.size());
  for (std::uint64_t a = 0; a < x1.size(); ++a)
    for (std::uint64_t b = 0; b < x2.size(); ++b) {
      std::uint64_t va = v0.table[a];
      r.vals.push_back(
          atom_map(f.vals[b], [&](std::uint64_t z) { return pair_code(va, z, y2n); }));
    }
  return r;
}

SemFun MonadInstance::semipure_right_s(const SemFun& f, const FinFun& v0) const {
  const Obj& x1 = f.dom;
  const Obj& x2 = v0.dom;
  const std::uint64_t y2n = v0.cod.size();
  SemFun r{Obj::prod(x1, x2), Obj::prod(f.cod, v0.cod), {}};
  r.vals.reserve(x1.size() * x2.size());
  for (std::uint64_t a = 0; a < x1.size(); ++a)
    for (std::uint64_t b = 0; b < x2.size(); ++b) {
      std::uint64_t vb = v0.table[b];
      r.vals.push_back(
          atom_map(f.vals[a], [&](std::uint64_t y) { return pair_code(y, vb, y2n); }));
    }
  return r;
}

// --- error -------------------------------------------------------------------

namespace {

class ErrorInstance : public MonadInstance {
 public:
  using MonadInstance::MonadInstance;

  Obj carrier_of(const Obj& y) const override {
    return Obj::carrier(MonadKind::error_monad, cfg_.e_size, y);
  }
  SemVal eta_sem(std::uint64_t y) const override { return SemVal{0, y, {}}; }

  SemVal decode(std::uint64_t code, const Obj& y) const override {
    if (code < y.size()) return SemVal{0, code, {}};
    return SemVal{1, code - y.size(), {}};
  }
  std::optional<std::uint64_t> encode(const SemVal& v, const Obj& y) const override {
    return v.s0 == 0 ? v.s1 : y.size() + v.s1;
  }
  SemVal atom_map(const SemVal& v,
                  const std::function<std::uint64_t(std::uint64_t)>& h) const override {
    return v.s0 == 0 ? SemVal{0, h(v.s1), {}} : v;
  }
  SemVal star(const SemFun& g, const SemVal& c) const override {
    return c.s0 == 0 ? g.vals[c.s1] : c;
  }
  bool cons_sem(const SemVal& c, std::uint64_t y) const override {
    return c.s0 == 1 || c.s1 == y;
  }
  bool ext_sem(const SemVal& c, const SemVal& d) const override {
    if (c.s0 == 0) return d.s0 == 0 && d.s1 == c.s1;  // defined stays defined
    return d.s0 == 1 ? d.s1 == c.s1 : true;           // errors agree where d errs
  }
  bool lrext_sem(const SemVal& c, const SemVal& d) const override {
    return !(c.s0 == 0 && d.s0 == 0 && c.s1 != d.s1);
  }
};

// --- list ----------------------------------------------------------------------

class ListInstance : public MonadInstance {
 public:
  using MonadInstance::MonadInstance;

  Obj carrier_of(const Obj& y) const override {
    return Obj::carrier(MonadKind::list_monad, cfg_.list_cap, y);
  }
  SemVal eta_sem(std::uint64_t y) const override {
    return SemVal{0, 0, {static_cast<std::uint32_t>(y)}};
  }

  SemVal decode(std::uint64_t code, const Obj& y) const override {
    const std::uint64_t n = y.size();
    std::uint64_t k = 0, block = 1;
    while (code >= block) {
      code -= block;
      block *= n;
      ++k;
    }
    SemVal v;
    v.seq.resize(k);
    for (std::uint64_t j = k; j-- > 0;) {
      v.seq[j] = static_cast<std::uint32_t>(code % n);
      code /= n;
    }
    return v;
  }
  std::optional<std::uint64_t> encode(const SemVal& v, const Obj& y) const override {
    if (v.seq.size() > cfg_.list_cap) return std::nullopt;
    const std::uint64_t n = y.size();
    std::uint64_t off = 0, block = 1;
    for (std::size_t j = 0; j < v.seq.size(); ++j) {
      off += block;
      block *= n;
    }
    std::uint64_t code = 0;
    for (auto a : v.seq) code = code * n + a;
    return off + code;
  }
  SemVal atom_map(const SemVal& v,
                  const std::function<std::uint64_t(std::uint64_t)>& h) const override {
    SemVal r;
    r.seq.reserve(v.seq.size());
    for (auto a : v.seq) r.seq.push_back(static_cast<std::uint32_t>(h(a)));
    return r;
  }
  SemVal star(const SemFun& g, const SemVal& c) const override {
    SemVal r;
    for (auto a : c.seq) {
      const auto& s = g.vals[a].seq;
      r.seq.insert(r.seq.end(), s.begin(), s.end());
    }
    return r;
  }
  bool cons_sem(const SemVal& c, std::uint64_t y) const override {
    for (auto a : c.seq)
      if (a != y) return false;
    return true;
  }
  // c must be d with every entry repeated >= 0 times, in order.
  bool ext_sem(const SemVal& c, const SemVal& d) const override {
    const auto& a = c.seq;
    const auto& b = d.seq;
    std::vector<char> reach((a.size() + 1) * (b.size() + 1), 0);
    auto at = [&](std::size_t i, std::size_t j) -> char& {
      return reach[i * (b.size() + 1) + j];
    };
    at(0, 0) = 1;
    for (std::size_t i = 0; i <= a.size(); ++i)
      for (std::size_t j = 0; j <= b.size(); ++j) {
        if (!at(i, j)) continue;
        if (j < b.size()) at(i, j + 1) = 1;
        if (i < a.size() && j < b.size() && a[i] == b[j]) at(i + 1, j) = 1;
      }
    return at(a.size(), b.size()) != 0;
  }
  bool lrext_sem(const SemVal&, const SemVal&) const override {
    // concatenating the two sequences always yields a common upper bound
    return true;
  }
};

// --- multiset ------------------------------------------------------------------

class MultisetInstance : public MonadInstance {
 public:
  using MonadInstance::MonadInstance;

  Obj carrier_of(const Obj& y) const override {
    return Obj::carrier(MonadKind::multiset_monad, cfg_.mult_cap, y);
  }
  SemVal eta_sem(std::uint64_t y) const override {
    return SemVal{0, 0, {static_cast<std::uint32_t>(y)}};
  }

  SemVal decode(std::uint64_t code, const Obj& y) const override {
    const std::uint64_t base = cfg_.mult_cap + 1;
    SemVal v;
    for (std::uint64_t i = 0; i < y.size(); ++i) {
      std::uint64_t cnt = code % base;
      code /= base;
      for (std::uint64_t r = 0; r < cnt; ++r) v.seq.push_back(static_cast<std::uint32_t>(i));
    }
    return v;
  }
  std::optional<std::uint64_t> encode(const SemVal& v, const Obj& y) const override {
    const std::uint64_t base = cfg_.mult_cap + 1;
    std::vector<std::uint64_t> cnt(y.size(), 0);
    for (auto a : v.seq) {
      if (++cnt[a] > cfg_.mult_cap) return std::nullopt;
    }
    std::uint64_t code = 0, place = 1;
    for (std::uint64_t i = 0; i < y.size(); ++i) {
      code += cnt[i] * place;
      place *= base;
    }
    return code;
  }
  SemVal atom_map(const SemVal& v,
                  const std::function<std::uint64_t(std::uint64_t)>& h) const override {
    SemVal r;
    r.seq.reserve(v.seq.size());
    for (auto a : v.seq) r.seq.push_back(static_cast<std::uint32_t>(h(a)));
    std::sort(r.seq.begin(), r.seq.end());
    return r;
  }
  SemVal star(const SemFun& g, const SemVal& c) const override {
    SemVal r;
    for (auto a : c.seq) {
      const auto& s = g.vals[a].seq;
      r.seq.insert(r.seq.end(), s.begin(), s.end());
    }
    std::sort(r.seq.begin(), r.seq.end());
    return r;
  }
  bool cons_sem(const SemVal& c, std::uint64_t y) const override {
    for (auto a : c.seq)
      if (a != y) return false;
    return true;
  }
  // support inclusion
  bool ext_sem(const SemVal& c, const SemVal& d) const override {
    for (auto a : c.seq)
      if (!std::binary_search(d.seq.begin(), d.seq.end(), a)) return false;
    return true;
  }
  bool lrext_sem(const SemVal&, const SemVal&) const override {
    return true;  // the union of supports is a common upper bound
  }
};

// --- powerset ------------------------------------------------------------------

class PowersetInstance : public MonadInstance {
 public:
  using MonadInstance::MonadInstance;

  Obj carrier_of(const Obj& y) const override {
    return Obj::carrier(MonadKind::powerset_monad, 0, y);
  }
  SemVal eta_sem(std::uint64_t y) const override {
    return SemVal{std::uint64_t{1} << y, 0, {}};
  }

  SemVal decode(std::uint64_t code, const Obj&) const override { return SemVal{code, 0, {}}; }
  std::optional<std::uint64_t> encode(const SemVal& v, const Obj&) const override {
    return v.s0;
  }
  SemVal atom_map(const SemVal& v,
                  const std::function<std::uint64_t(std::uint64_t)>& h) const override {
    SemVal r;
    for (std::uint64_t a = 0; a < 64; ++a)
      if (v.s0 & (std::uint64_t{1} << a)) r.s0 |= std::uint64_t{1} << h(a);
    return r;
  }
  SemVal star(const SemFun& g, const SemVal& c) const override {
    SemVal r;
    for (std::uint64_t a = 0; a < 64; ++a)
      if (c.s0 & (std::uint64_t{1} << a)) r.s0 |= g.vals[a].s0;
    return r;
  }
  bool cons_sem(const SemVal& c, std::uint64_t y) const override {
    return (c.s0 & ~(std::uint64_t{1} << y)) == 0;
  }
  bool ext_sem(const SemVal& c, const SemVal& d) const override {
    return (c.s0 & ~d.s0) == 0;
  }
  bool lrext_sem(const SemVal&, const SemVal&) const override { return true; }
};

}  // namespace

// --- state ---------------------------------------------------------------------

StateInstance::StateInstance(InstanceConfig cfg)
    : EffectInstance(std::move(cfg)), s_(Obj::base("S", cfg_.s_size)) {}

KMor StateInstance::pure_embed(const FinFun& v0) const {
  Obj d = kl_dom(v0.dom), c = kl_cod(v0.cod);
  std::vector<std::uint32_t> t(d.size());
  for (std::uint64_t s = 0; s < s_.size(); ++s)
    for (std::uint64_t x = 0; x < v0.dom.size(); ++x)
      t[pair_code(s, x, v0.dom.size())] =
          static_cast<std::uint32_t>(pair_code(s, v0.table[x], v0.cod.size()));
  return KMor{v0.dom, v0.cod, FinFun(d, c, std::move(t))};
}

SemVal StateInstance::decode(std::uint64_t code, const Obj& y) const {
  return SemVal{code / y.size(), code % y.size(), {}};
}

std::optional<std::uint64_t> StateInstance::encode(const SemVal& v, const Obj& y) const {
  return pair_code(v.s0, v.s1, y.size());
}

SemVal StateInstance::atom_map(const SemVal& v,
                               const std::function<std::uint64_t(std::uint64_t)>& h) const {
  return SemVal{v.s0, h(v.s1), {}};
}

SemVal StateInstance::star(const SemFun& g, const SemVal& c) const {
  return g.vals[pair_code(c.s0, c.s1, g.dom.size())];
}

bool StateInstance::cons_sem(const SemVal& c, std::uint64_t y) const { return c.s1 == y; }

bool StateInstance::ext_sem(const SemVal& c, const SemVal& d) const { return c.s1 == d.s1; }

bool StateInstance::lrext_sem(const SemVal& c, const SemVal& d) const { return c.s1 == d.s1; }

SemFun StateInstance::semipure_left_s(const FinFun& v0, const SemFun& f) const {
  const Obj& x1 = v0.dom;
  const Obj& x2 = f.dom;
  const std::uint64_t y2n = f.cod.size();
  SemFun r{Obj::prod(x1, x2), Obj::prod(v0.cod, f.cod), {}};
  r.vals.reserve(s_.size() * x1.size() * x2.size());
  for (std::uint64_t s = 0; s < s_.size(); ++s)
    for (std::uint64_t a = 0; a < x1.size(); ++a)
      for (std::uint64_t b = 0; b < x2.size(); ++b) {
        const SemVal& c = f.vals[pair_code(s, b, x2.size())];
        r.vals.push_back(SemVal{c.s0, pair_code(v0.table[a], c.s1, y2n), {}});
      }
  return r;
}

SemFun StateInstance::semipure_right_s(const SemFun& f, const FinFun& v0) const {
  const Obj& x1 = f.dom;
  const Obj& x2 = v0.dom;
  const std::uint64_t y2n = v0.cod.size();
  SemFun r{Obj::prod(x1, x2), Obj::prod(f.cod, v0.cod), {}};
  r.vals.reserve(s_.size() * x1.size() * x2.size());
  for (std::uint64_t s = 0; s < s_.size(); ++s)
    for (std::uint64_t a = 0; a < x1.size(); ++a)
      for (std::uint64_t b = 0; b < x2.size(); ++b) {
        const SemVal& c = f.vals[pair_code(s, a, x1.size())];
        r.vals.push_back(SemVal{c.s0, pair_code(c.s1, v0.table[b], y2n), {}});
      }
  return r;
}

// --- construction ---------------------------------------------------------------

InstancePtr build_instance(const InstanceConfig& cfg) {
  if (cfg.tag == "error") {
    if (cfg.e_size < 1) throw config_error("error instance needs |E| >= 1");
    return std::make_shared<ErrorInstance>(cfg);
  }
  if (cfg.tag == "partiality") {
    if (cfg.e_size != 1) throw config_error("partiality requires |E| = 1");
    return std::make_shared<ErrorInstance>(cfg);
  }
  if (cfg.tag == "state") {
    if (cfg.s_size < 1) throw config_error("state instance needs |S| >= 1");
    return std::make_shared<StateInstance>(cfg);
  }
  if (cfg.tag == "list") {
    if (cfg.list_cap < 1) throw config_error("list instance needs cap >= 1");
    return std::make_shared<ListInstance>(cfg);
  }
  if (cfg.tag == "multiset") {
    if (cfg.mult_cap < 1) throw config_error("multiset instance needs cap >= 1");
    return std::make_shared<MultisetInstance>(cfg);
  }
  if (cfg.tag == "powerset") return std::make_shared<PowersetInstance>(cfg);
  throw config_error("unknown instance tag: " + cfg.tag);
}

bool partial_leq(const EffectInstance& inst, const KMor& f, const KMor& g) {
  if (inst.tag() != "partiality" && inst.tag() != "error")
    throw structural_error("definedness order only applies to error-family instances");
  if (!(f.dom == g.dom && f.cod == g.cod))
    throw structural_error("partial_leq: morphisms not parallel");
  SemFun fs = inst.sem(f), gs = inst.sem(g);
  for (std::size_t u = 0; u < fs.vals.size(); ++u)
    if (fs.vals[u].s0 == 0 && !(gs.vals[u] == fs.vals[u])) return false;
  return true;
}

// --- mutants ----------------------------------------------------------------------

namespace {

std::uint64_t involute01(std::uint64_t a) { return a == 0 ? 1 : (a == 1 ? 0 : a); }

class MonadDelegate : public MonadInstance {
 public:
  explicit MonadDelegate(std::shared_ptr<const MonadInstance> base)
      : MonadInstance(base->config()), base_(std::move(base)) {}

  Obj carrier_of(const Obj& y) const override { return base_->carrier_of(y); }
  SemVal eta_sem(std::uint64_t y) const override { return base_->eta_sem(y); }
  SemVal decode(std::uint64_t c, const Obj& y) const override { return base_->decode(c, y); }
  std::optional<std::uint64_t> encode(const SemVal& v, const Obj& y) const override {
    return base_->encode(v, y);
  }
  SemVal atom_map(const SemVal& v,
                  const std::function<std::uint64_t(std::uint64_t)>& h) const override {
    return base_->atom_map(v, h);
  }
  SemVal star(const SemFun& g, const SemVal& c) const override { return base_->star(g, c); }
  bool cons_sem(const SemVal& c, std::uint64_t y) const override {
    return base_->cons_sem(c, y);
  }
  bool ext_sem(const SemVal& c, const SemVal& d) const override {
    return base_->ext_sem(c, d);
  }
  bool lrext_sem(const SemVal& c, const SemVal& d) const override {
    return base_->lrext_sem(c, d);
  }
  FinFun strength(const Obj& y1, const Obj& y2) const override {
    return base_->strength(y1, y2);
  }

 protected:
  std::shared_ptr<const MonadInstance> base_;
};

class StateDelegate : public StateInstance {
 public:
  using StateInstance::StateInstance;
};

class MutantAlwaysConsistentM : public MonadDelegate {
 public:
  using MonadDelegate::MonadDelegate;
  bool cons_sem(const SemVal&, std::uint64_t) const override { return true; }
};

class MutantAlwaysConsistentS : public StateDelegate {
 public:
  using StateDelegate::StateDelegate;
  bool cons_sem(const SemVal&, std::uint64_t) const override { return true; }
};

class MutantExtendedStrictM : public MonadDelegate {
 public:
  using MonadDelegate::MonadDelegate;
  bool ext_sem(const SemVal& c, const SemVal& d) const override { return c == d; }
};

class MutantExtendedStrictS : public StateDelegate {
 public:
  using StateDelegate::StateDelegate;
  bool ext_sem(const SemVal& c, const SemVal& d) const override { return c == d; }
};

template <class Base>
class MutantSemipureTwist : public Base {
 public:
  using Base::Base;
  SemFun semipure_left_s(const FinFun& v0, const SemFun& f) const override {
    FinFun twisted = v0;
    if (v0.cod.size() >= 2)
      for (auto& v : twisted.table) v = static_cast<std::uint32_t>(involute01(v));
    return Base::semipure_left_s(twisted, f);
  }
};

class MutantStrengthTwist : public MonadDelegate {
 public:
  using MonadDelegate::MonadDelegate;
  FinFun strength(const Obj& y1, const Obj& y2) const override {
    FinFun t = base_->strength(y1, y2);
    if (y1.size() < 2) return t;
    Obj pc = Obj::prod(y1, y2);
    for (auto& code : t.table) {
      SemVal v = base_->atom_map(base_->decode(code, pc), [&](std::uint64_t p) {
        return pair_code(involute01(p / y2.size()), p % y2.size(), y2.size());
      });
      code = static_cast<std::uint32_t>(*base_->encode(v, pc));
    }
    return t;
  }
};

template <class Base>
class MutantEffectBlind : public Base {
 public:
  using Base::Base;
  bool same_effect(const SemFun& f, const SemFun& g) const override {
    return f.dom == g.dom;
  }
};

std::shared_ptr<const MonadInstance> monad_base(const InstanceConfig& cfg) {
  auto p = std::dynamic_pointer_cast<const MonadInstance>(build_instance(cfg));
  if (!p) throw config_error("mutant requires a monad-backed instance: " + cfg.tag);
  return p;
}

}  // namespace

InstancePtr make_mutant_always_consistent(const InstanceConfig& cfg) {
  if (cfg.tag == "state") return std::make_shared<MutantAlwaysConsistentS>(cfg);
  return std::make_shared<MutantAlwaysConsistentM>(monad_base(cfg));
}

InstancePtr make_mutant_extended_total(const InstanceConfig& cfg) {
  if (cfg.tag == "state") return std::make_shared<MutantExtendedStrictS>(cfg);
  return std::make_shared<MutantExtendedStrictM>(monad_base(cfg));
}

InstancePtr make_mutant_semipure_twist(const InstanceConfig& cfg) {
  if (cfg.tag == "state") return std::make_shared<MutantSemipureTwist<StateDelegate>>(cfg);
  return std::make_shared<MutantSemipureTwist<MonadDelegate>>(monad_base(cfg));
}

InstancePtr make_mutant_strength_twist(const InstanceConfig& cfg) {
  return std::make_shared<MutantStrengthTwist>(monad_base(cfg));
}

InstancePtr make_mutant_effect_blind(const InstanceConfig& cfg) {
  if (cfg.tag == "state") return std::make_shared<MutantEffectBlind<StateDelegate>>(cfg);
  return std::make_shared<MutantEffectBlind<MonadDelegate>>(monad_base(cfg));
}

}  // namespace effcat
