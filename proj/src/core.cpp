#include "effcat/core.hpp"

#include <limits>

namespace effcat {

namespace {
constexpr std::uint64_t kMaxCarrier = 1000000000000000ULL;  // 1e15
}

std::string monad_kind_name(MonadKind k) {
  switch (k) {
    case MonadKind::error_monad: return "error";
    case MonadKind::list_monad: return "list";
    case MonadKind::multiset_monad: return "multiset";
    case MonadKind::powerset_monad: return "powerset";
  }
  throw structural_error("unknown monad kind");
}

MonadKind monad_kind_from_name(const std::string& s) {
  if (s == "error") return MonadKind::error_monad;
  if (s == "list") return MonadKind::list_monad;
  if (s == "multiset") return MonadKind::multiset_monad;
  if (s == "powerset") return MonadKind::powerset_monad;
  throw config_error("unknown monad kind: " + s);
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kMaxCarrier / a)
    throw config_error("carrier size overflow in multiplication");
  return a * b;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > kMaxCarrier - b) throw config_error("carrier size overflow in addition");
  return a + b;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

Obj Obj::base(std::string name, std::uint64_t size) {
  if (size == 0) throw config_error("base object must be non-empty");
  auto n = std::make_shared<Node>();
  n->kind = Kind::base;
  n->size = size;
  n->name = std::move(name);
  Obj o;
  o.node_ = std::move(n);
  return o;
}

Obj Obj::terminal() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::terminal;
  n->size = 1;
  Obj o;
  o.node_ = std::move(n);
  return o;
}

Obj Obj::prod(const Obj& a, const Obj& b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::prod;
  n->size = checked_mul(a.size(), b.size());
  n->left = a;
  n->right = b;
  Obj o;
  o.node_ = std::move(n);
  return o;
}

Obj Obj::carrier(MonadKind mk, std::uint32_t param, const Obj& inner) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::carrier;
  n->mk = mk;
  n->param = param;
  n->left = inner;
  switch (mk) {
    case MonadKind::error_monad:
      if (param == 0) throw config_error("error monad needs at least one error");
      n->size = checked_add(inner.size(), param);
      break;
    case MonadKind::list_monad: {
      std::uint64_t total = 0;
      for (std::uint32_t k = 0; k <= param; ++k)
        total = checked_add(total, checked_pow(inner.size(), k));
      n->size = total;
      break;
    }
    case MonadKind::multiset_monad:
      n->size = checked_pow(param + 1, inner.size());
      break;
    case MonadKind::powerset_monad:
      if (inner.size() > 62) throw config_error("powerset carrier too large");
      n->size = std::uint64_t{1} << inner.size();
      break;
  }
  Obj o;
  o.node_ = std::move(n);
  return o;
}

bool Obj::operator==(const Obj& o) const {
  if (node_ == o.node_) return true;
  if (!node_ || !o.node_) return false;
  if (node_->kind != o.node_->kind) return false;
  switch (node_->kind) {
    case Kind::base:
      return node_->name == o.node_->name && node_->size == o.node_->size;
    case Kind::terminal:
      return true;
    case Kind::prod:
      return node_->left == o.node_->left && node_->right == o.node_->right;
    case Kind::carrier:
      return node_->mk == o.node_->mk && node_->param == o.node_->param &&
             node_->left == o.node_->left;
  }
  return false;
}

std::string Obj::str() const {
  switch (kind()) {
    case Kind::base: return name() + "#" + std::to_string(size());
    case Kind::terminal: return "1";
    case Kind::prod: return "(" + left().str() + "*" + right().str() + ")";
    case Kind::carrier:
      return monad_kind_name(monad_kind()) + "<" + std::to_string(monad_param()) +
             ">(" + inner().str() + ")";
  }
  return "?";
}

json Obj::to_json() const {
  switch (kind()) {
    case Kind::base:
      return json{{"k", "base"}, {"name", name()}, {"size", size()}};
    case Kind::terminal:
      return json{{"k", "terminal"}};
    case Kind::prod:
      return json{{"k", "prod"}, {"left", left().to_json()}, {"right", right().to_json()}};
    case Kind::carrier:
      return json{{"k", "carrier"},
                  {"monad", monad_kind_name(monad_kind())},
                  {"param", monad_param()},
                  {"inner", inner().to_json()}};
  }
  throw structural_error("bad object");
}

Obj Obj::from_json(const json& j) {
  const std::string k = j.at("k").get<std::string>();
  if (k == "base") return base(j.at("name").get<std::string>(), j.at("size").get<std::uint64_t>());
  if (k == "terminal") return terminal();
  if (k == "prod") return prod(from_json(j.at("left")), from_json(j.at("right")));
  if (k == "carrier")
    return carrier(monad_kind_from_name(j.at("monad").get<std::string>()),
                   j.at("param").get<std::uint32_t>(), from_json(j.at("inner")));
  throw structural_error("bad object json");
}

FinFun::FinFun(Obj dom_, Obj cod_, std::vector<std::uint32_t> table_)
    : dom(std::move(dom_)), cod(std::move(cod_)), table(std::move(table_)) {
  if (table.size() != dom.size())
    throw structural_error("function table length does not match domain");
  for (auto v : table)
    if (v >= cod.size()) throw structural_error("function table entry out of codomain");
}

json FinFun::to_json() const {
  return json{{"dom", dom.to_json()}, {"cod", cod.to_json()}, {"table", table}};
}

FinFun FinFun::from_json(const json& j) {
  return FinFun(Obj::from_json(j.at("dom")), Obj::from_json(j.at("cod")),
                j.at("table").get<std::vector<std::uint32_t>>());
}

FinFun identity(const Obj& x) {
  std::vector<std::uint32_t> t(x.size());
  for (std::uint64_t i = 0; i < x.size(); ++i) t[i] = static_cast<std::uint32_t>(i);
  return FinFun(x, x, std::move(t));
}

FinFun compose(const FinFun& g, const FinFun& f) {
  if (!(f.cod == g.dom)) throw structural_error("compose: cod/dom mismatch");
  std::vector<std::uint32_t> t(f.table.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = g.table[f.table[i]];
  return FinFun(f.dom, g.cod, std::move(t));
}

FinFun bang(const Obj& x) {
  return FinFun(x, Obj::terminal(), std::vector<std::uint32_t>(x.size(), 0));
}

FinFun constant(const Obj& x, const Obj& y, std::uint64_t value) {
  return FinFun(x, y, std::vector<std::uint32_t>(x.size(), static_cast<std::uint32_t>(value)));
}

FinFun global_elem(const Obj& y, std::uint64_t value) {
  return constant(Obj::terminal(), y, value);
}

FinFun proj1(const Obj& a, const Obj& b) {
  Obj p = Obj::prod(a, b);
  std::vector<std::uint32_t> t(p.size());
  for (std::uint64_t i = 0; i < p.size(); ++i) t[i] = static_cast<std::uint32_t>(i / b.size());
  return FinFun(p, a, std::move(t));
}

FinFun proj2(const Obj& a, const Obj& b) {
  Obj p = Obj::prod(a, b);
  std::vector<std::uint32_t> t(p.size());
  for (std::uint64_t i = 0; i < p.size(); ++i) t[i] = static_cast<std::uint32_t>(i % b.size());
  return FinFun(p, b, std::move(t));
}

FinFun pairing(const FinFun& u, const FinFun& v) {
  if (!(u.dom == v.dom)) throw structural_error("pairing: domain mismatch");
  Obj p = Obj::prod(u.cod, v.cod);
  std::vector<std::uint32_t> t(u.dom.size());
  for (std::uint64_t i = 0; i < u.dom.size(); ++i)
    t[i] = static_cast<std::uint32_t>(pair_code(u.table[i], v.table[i], v.cod.size()));
  return FinFun(u.dom, p, std::move(t));
}

FinFun product_fun(const FinFun& f, const FinFun& g) {
  return pairing(compose(f, proj1(f.dom, g.dom)), compose(g, proj2(f.dom, g.dom)));
}

FinFun assoc(const Obj& a, const Obj& b, const Obj& c) {
  Obj dom = Obj::prod(Obj::prod(a, b), c);
  Obj cod = Obj::prod(a, Obj::prod(b, c));
  std::vector<std::uint32_t> t(dom.size());
  for (std::uint64_t x = 0; x < a.size(); ++x)
    for (std::uint64_t y = 0; y < b.size(); ++y)
      for (std::uint64_t z = 0; z < c.size(); ++z) {
        std::uint64_t in = pair_code(pair_code(x, y, b.size()), z, c.size());
        std::uint64_t out = pair_code(x, pair_code(y, z, c.size()), b.size() * c.size());
        t[in] = static_cast<std::uint32_t>(out);
      }
  return FinFun(dom, cod, std::move(t));
}

FinFun assoc_inv(const Obj& a, const Obj& b, const Obj& c) { return inverse(assoc(a, b, c)); }

FinFun swap_iso(const Obj& a, const Obj& b) {
  Obj dom = Obj::prod(a, b);
  Obj cod = Obj::prod(b, a);
  std::vector<std::uint32_t> t(dom.size());
  for (std::uint64_t x = 0; x < a.size(); ++x)
    for (std::uint64_t y = 0; y < b.size(); ++y)
      t[pair_code(x, y, b.size())] = static_cast<std::uint32_t>(pair_code(y, x, a.size()));
  return FinFun(dom, cod, std::move(t));
}

FinFun unit_l(const Obj& x) {
  Obj dom = Obj::prod(x, Obj::terminal());
  return FinFun(dom, x, identity(x).table);
}

FinFun unit_l_inv(const Obj& x) { return inverse(unit_l(x)); }

FinFun unit_r(const Obj& x) {
  Obj dom = Obj::prod(Obj::terminal(), x);
  return FinFun(dom, x, identity(x).table);
}

FinFun unit_r_inv(const Obj& x) { return inverse(unit_r(x)); }

FinFun inverse(const FinFun& f) {
  if (f.dom.size() != f.cod.size()) throw structural_error("inverse: not bijective");
  std::vector<std::uint32_t> t(f.cod.size(), std::numeric_limits<std::uint32_t>::max());
  for (std::uint64_t i = 0; i < f.table.size(); ++i) {
    if (t[f.table[i]] != std::numeric_limits<std::uint32_t>::max())
      throw structural_error("inverse: not injective");
    t[f.table[i]] = static_cast<std::uint32_t>(i);
  }
  return FinFun(f.cod, f.dom, std::move(t));
}

std::optional<std::uint64_t> HomSet::size_of(const Obj& dom, const Obj& cod) {
  long double approx = 1.0L;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < dom.size(); ++i) {
    approx *= static_cast<long double>(cod.size());
    if (approx > 9e18L) return std::nullopt;
    r *= cod.size();
  }
  return r;
}

HomSet::HomSet(Obj dom, Obj cod, const HomBudget& budget)
    : dom_(std::move(dom)), cod_(std::move(cod)) {
  auto n = size_of(dom_, cod_);
  if (!n || *n > budget.max_hom_size)
    throw budget_error("hom-set of size " + (n ? std::to_string(*n) : std::string("2^64+")) +
                           " exceeds max_hom_size " + std::to_string(budget.max_hom_size),
                       n.value_or(std::numeric_limits<std::uint64_t>::max()));
  count_ = *n;
  place_.resize(dom_.size());
  std::uint64_t p = 1;
  for (std::uint64_t j = dom_.size(); j-- > 0;) {
    place_[j] = p;
    p *= cod_.size();
  }
}

FinFun HomSet::at(std::uint64_t i) const {
  if (i >= count_) throw structural_error("hom index out of range");
  std::vector<std::uint32_t> t(dom_.size());
  for (std::uint64_t j = 0; j < dom_.size(); ++j)
    t[j] = static_cast<std::uint32_t>((i / place_[j]) % cod_.size());
  return FinFun(dom_, cod_, std::move(t));
}

}  // namespace effcat
