#pragma once

// Finite base category: objects with dense integer element codes, total
// functions as lookup tables, chosen products, and budgeted hom-set
// enumeration.  Everything here is immutable after construction.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace effcat {

using json = nlohmann::json;

struct structural_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct budget_error : std::runtime_error {
  std::uint64_t required;
  budget_error(const std::string& msg, std::uint64_t required_)
      : std::runtime_error(msg), required(required_) {}
};

enum class MonadKind { error_monad, list_monad, multiset_monad, powerset_monad };

std::string monad_kind_name(MonadKind k);
MonadKind monad_kind_from_name(const std::string& s);

// Checked arithmetic; throws config_error when a carrier would not fit.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

/// An object of the finite universe.  Element codes are 0..size()-1; a
/// product uses row-major pairing (a,b) -> a*size(B)+b.
class Obj {
 public:
  enum class Kind { base, terminal, prod, carrier };

  Obj() = default;

  static Obj base(std::string name, std::uint64_t size);
  static Obj terminal();
  static Obj prod(const Obj& a, const Obj& b);
  static Obj carrier(MonadKind mk, std::uint32_t param, const Obj& inner);

  bool valid() const { return node_ != nullptr; }
  Kind kind() const;
  std::uint64_t size() const;
  const std::string& name() const;
  const Obj& left() const;
  const Obj& right() const;
  const Obj& inner() const;
  MonadKind monad_kind() const;
  std::uint32_t monad_param() const;

  bool operator==(const Obj& o) const;
  bool operator!=(const Obj& o) const { return !(*this == o); }

  std::string str() const;
  json to_json() const;
  static Obj from_json(const json& j);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct Obj::Node {
  Kind kind = Kind::terminal;
  std::uint64_t size = 1;
  std::string name;
  Obj left, right;  // prod components; left doubles as carrier inner
  MonadKind mk = MonadKind::error_monad;
  std::uint32_t param = 0;
};

inline Obj::Kind Obj::kind() const { return node_->kind; }
inline std::uint64_t Obj::size() const { return node_->size; }
inline const std::string& Obj::name() const { return node_->name; }
inline const Obj& Obj::left() const { return node_->left; }
inline const Obj& Obj::right() const { return node_->right; }
inline const Obj& Obj::inner() const { return node_->left; }
inline MonadKind Obj::monad_kind() const { return node_->mk; }
inline std::uint32_t Obj::monad_param() const { return node_->param; }

inline std::uint64_t pair_code(std::uint64_t a, std::uint64_t b, std::uint64_t bsize) {
  return a * bsize + b;
}

/// A total function between carriers, stored as a table of codomain codes.
struct FinFun {
  Obj dom, cod;
  std::vector<std::uint32_t> table;

  FinFun() = default;
  FinFun(Obj dom_, Obj cod_, std::vector<std::uint32_t> table_);

  std::uint64_t operator()(std::uint64_t x) const { return table[x]; }
  bool operator==(const FinFun& o) const {
    return dom == o.dom && cod == o.cod && table == o.table;
  }
  bool operator!=(const FinFun& o) const { return !(*this == o); }

  json to_json() const;
  static FinFun from_json(const json& j);
};

FinFun identity(const Obj& x);
FinFun compose(const FinFun& g, const FinFun& f);  // g after f
FinFun bang(const Obj& x);                         // unique map to terminal
FinFun constant(const Obj& x, const Obj& y, std::uint64_t value);
FinFun global_elem(const Obj& y, std::uint64_t value);  // terminal -> Y

// Chosen-product structure.
FinFun proj1(const Obj& a, const Obj& b);
FinFun proj2(const Obj& a, const Obj& b);
FinFun pairing(const FinFun& u, const FinFun& v);                // <u,v>
FinFun product_fun(const FinFun& f, const FinFun& g);            // f x g

// Structural isomorphisms built from projections and pairings.
FinFun assoc(const Obj& a, const Obj& b, const Obj& c);      // (AxB)xC -> Ax(BxC)
FinFun assoc_inv(const Obj& a, const Obj& b, const Obj& c);
FinFun swap_iso(const Obj& a, const Obj& b);                 // AxB -> BxA
FinFun unit_l(const Obj& x);                                 // Xx1 -> X
FinFun unit_l_inv(const Obj& x);
FinFun unit_r(const Obj& x);                                 // 1xX -> X
FinFun unit_r_inv(const Obj& x);
FinFun inverse(const FinFun& f);  // structural_error unless bijective

struct HomBudget {
  std::uint64_t max_hom_size = 20000;
  std::uint64_t max_enumerations = 2000000000ULL;
};

/// Deterministic enumeration of Hom(X,T) in lexicographic table order.
class HomSet {
 public:
  HomSet(Obj dom, Obj cod, const HomBudget& budget);

  std::uint64_t count() const { return count_; }
  FinFun at(std::uint64_t i) const;

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t i = 0; i < count_; ++i) f(at(i));
  }

  /// Size of Hom(X,T) without constructing it; nullopt on overflow.
  static std::optional<std::uint64_t> size_of(const Obj& dom, const Obj& cod);

 private:
  Obj dom_, cod_;
  std::uint64_t count_;
  std::vector<std::uint64_t> place_;  // place value of each table slot
};

}  // namespace effcat
