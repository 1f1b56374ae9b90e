#include "doctest.h"
#include "effcat/core.hpp"

using namespace effcat;

TEST_CASE("object sizes") {
  Obj a = Obj::base("A", 3);
  Obj b = Obj::base("B", 2);
  CHECK(a.size() == 3);
  CHECK(Obj::terminal().size() == 1);
  CHECK(Obj::prod(a, b).size() == 6);
  CHECK(Obj::prod(a, Obj::prod(b, b)).size() == 12);
}

TEST_CASE("composition and identities") {
  Obj a = Obj::base("A", 2), b = Obj::base("B", 3), c = Obj::base("C", 2);
  FinFun f(a, b, {1, 2});
  FinFun g(b, c, {0, 1, 1});
  FinFun gf = compose(g, f);
  CHECK(gf.dom == a);
  CHECK(gf.cod == c);
  CHECK(gf.table == std::vector<std::uint32_t>{1, 1});
  CHECK(compose(f, identity(a)) == f);
  CHECK(compose(identity(b), f) == f);
}

TEST_CASE("chosen products") {
  Obj a = Obj::base("A", 2), b = Obj::base("B", 3), x = Obj::base("X", 2);
  FinFun u(x, a, {1, 0});
  FinFun v(x, b, {2, 2});
  FinFun p = pairing(u, v);
  CHECK(compose(proj1(a, b), p) == u);
  CHECK(compose(proj2(a, b), p) == v);
  // The pairing is the unique map with these projections.
  HomBudget budget;
  HomSet hs(x, Obj::prod(a, b), budget);
  std::uint64_t hits = 0;
  hs.for_each([&](const FinFun& h) {
    if (compose(proj1(a, b), h) == u && compose(proj2(a, b), h) == v) ++hits;
  });
  CHECK(hits == 1);
}

TEST_CASE("structural isomorphisms invert") {
  Obj a = Obj::base("A", 2), b = Obj::base("B", 3), c = Obj::base("C", 2);
  CHECK(compose(assoc_inv(a, b, c), assoc(a, b, c)) ==
        identity(Obj::prod(Obj::prod(a, b), c)));
  CHECK(compose(swap_iso(b, a), swap_iso(a, b)) == identity(Obj::prod(a, b)));
  CHECK(compose(unit_l(a), unit_l_inv(a)) == identity(a));
  CHECK(compose(unit_r(a), unit_r_inv(a)) == identity(a));
  CHECK(inverse(swap_iso(a, b)) == swap_iso(b, a));
}

TEST_CASE("hom-set enumeration is complete and deterministic") {
  Obj x = Obj::base("X", 3), y = Obj::base("Y", 2);
  HomBudget budget;
  HomSet hs(x, y, budget);
  CHECK(hs.count() == 8);  // 2^3
  CHECK(HomSet::size_of(x, y) == std::optional<std::uint64_t>{8});
  // All distinct, in a stable order.
  std::vector<FinFun> all;
  hs.for_each([&](const FinFun& f) { all.push_back(f); });
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) CHECK(all[i] != all[j]);
  HomSet again(x, y, budget);
  for (std::uint64_t i = 0; i < hs.count(); ++i) CHECK(again.at(i) == all[i]);
}

TEST_CASE("FinFun json round trip") {
  Obj a = Obj::base("A", 2), b = Obj::base("B", 3);
  FinFun f(a, b, {2, 0});
  CHECK(FinFun::from_json(f.to_json()) == f);
}
