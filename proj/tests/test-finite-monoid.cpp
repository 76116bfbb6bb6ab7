#include <stdexcept>
#include <algorithm>

#include "coact/constructions.hpp"
#include "coact/finite-monoid.hpp"
#include "coact/random-monoid.hpp"
#include "doctest.h"

using namespace coact;

namespace {

ElementId el(const FiniteMonoid& m, const std::string& label) {
  auto e = m.element_of(label);
  REQUIRE(e.has_value());
  return *e;
}

}  // namespace

TEST_CASE("validate accepts U2 and rejects a broken triple") {
  CHECK(!u2_monoid().validate().has_value());

  // 1*e=e, e*1=1 breaks both the identity law and associativity
  FiniteMonoid bad(2, {0, 1, 0, 0}, 0, std::nullopt, {"1", "e"});
  auto v = bad.validate();
  REQUIRE(v.has_value());

  // identity fine but (ee)e != e(ee) after tampering: build a genuinely
  // non-associative table with a valid identity row/column
  FiniteMonoid bad2(3, {0, 1, 2, 1, 2, 1, 2, 1, 1}, 0);
  auto v2 = bad2.validate();
  REQUIRE(v2.has_value());
  CHECK(v2->find("associativity") != std::string::npos);
}

TEST_CASE("validate accepts the Brandt monoid over the trivial monoid") {
  BrandtMonoid b = brandt(trivial_monoid(), 2, true);
  CHECK(b.monoid.size() == 6);
  CHECK(!b.monoid.validate().has_value());
}

TEST_CASE("idempotents") {
  CHECK(u2_monoid().idempotents() == std::vector<ElementId>{0, 1});
  CHECK(cyclic_group(2).idempotents() == std::vector<ElementId>{0});

  BrandtMonoid b = brandt(trivial_monoid(), 2, true);
  std::vector<ElementId> expect{el(b.monoid, "(1,1,1)"), el(b.monoid, "(2,1,2)"),
                                el(b.monoid, "0"), el(b.monoid, "1")};
  std::sort(expect.begin(), expect.end());
  CHECK(b.monoid.idempotents() == expect);
}

TEST_CASE("natural order on idempotents") {
  FiniteMonoid u2 = u2_monoid();
  CHECK(natural_order(u2, el(u2, "e"), el(u2, "1")));
  CHECK(!natural_order(u2, el(u2, "1"), el(u2, "e")));

  BrandtMonoid b = brandt(trivial_monoid(), 2, true);
  CHECK(natural_order(b.monoid, el(b.monoid, "0"), el(b.monoid, "(1,1,1)")));

  CHECK_THROWS_AS(natural_order(cyclic_group(3), 1, 0), std::invalid_argument);
}

TEST_CASE("green structure of small monoids") {
  SUBCASE("a group is a single class for every relation") {
    GreenStructure g = green(cyclic_group(2));
    CHECK(g.R.num_classes() == 1);
    CHECK(g.L.num_classes() == 1);
    CHECK(g.H.num_classes() == 1);
    CHECK(g.D.num_classes() == 1);
    CHECK(g.J.num_classes() == 1);
  }
  SUBCASE("U2 separates 1 and e") {
    GreenStructure g = green(u2_monoid());
    CHECK(g.R.num_classes() == 2);
    CHECK(g.L.num_classes() == 2);
    CHECK(g.H.num_classes() == 2);
    CHECK(g.J.num_classes() == 2);
  }
  SUBCASE("Brandt monoid R-classes") {
    BrandtMonoid b = brandt(trivial_monoid(), 2, true);
    GreenStructure g = green(b.monoid);
    // {1}, {0}, row 1, row 2
    CHECK(g.R.num_classes() == 4);
    CHECK(g.R.same(el(b.monoid, "(1,1,1)"), el(b.monoid, "(1,1,2)")));
    CHECK(g.R.same(el(b.monoid, "(2,1,1)"), el(b.monoid, "(2,1,2)")));
    CHECK(!g.R.same(el(b.monoid, "(1,1,1)"), el(b.monoid, "(2,1,1)")));
    CHECK(!g.R.same(el(b.monoid, "1"), el(b.monoid, "0")));
  }
}

TEST_CASE("green invariants: H = R meet L, J from the preorder") {
  std::mt19937 rng(7);
  RandomMonoidOptions opt;
  for (int k = 0; k < 25; ++k) {
    FiniteMonoid m = random_monoid(rng, opt);
    GreenStructure g = green(m);
    CHECK(g.H == g.R.meet(g.L));
    CHECK(g.R.refines(g.D));
    CHECK(g.L.refines(g.D));
    for (ElementId a = 0; a < static_cast<ElementId>(m.size()); ++a) {
      for (ElementId b = 0; b < static_cast<ElementId>(m.size()); ++b) {
        CHECK(g.J.same(a, b) == (g.leq(a, b) && g.leq(b, a)));
      }
    }
    // finite monoids: D = J
    CHECK(g.D == g.J);
  }
}

TEST_CASE("regularity and inverse predicates") {
  BrandtMonoid b = brandt(cyclic_group(2), 2, true);
  CHECK(is_regular(b.monoid));
  CHECK(is_inverse(b.monoid));

  CHECK(is_regular(u2_monoid()));
  CHECK(is_inverse(u2_monoid()));

  // {1, a, 0} with a*a = 0: a is not regular
  FiniteMonoid nil(3, {0, 1, 2, 1, 2, 2, 2, 2, 2}, 0, 2, {"1", "a", "0"});
  REQUIRE(!nil.validate().has_value());
  RegularityResult r = regularity(nil);
  CHECK(!r.regular);
  CHECK(*r.witness == 1);
}

TEST_CASE("inverse implies regular on random monoids") {
  std::mt19937 rng(11);
  RandomMonoidOptions opt;
  int checked = 0;
  for (int k = 0; k < 200; ++k) {
    FiniteMonoid m = random_monoid(rng, opt);
    if (is_inverse(m)) {
      CHECK(is_regular(m));
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("tilde relations") {
  SUBCASE("E = {1} makes ~R_E universal") {
    FiniteMonoid m = brandt(cyclic_group(2), 2, true).monoid;
    TildeRelations t = tilde_relations(m, {m.identity()});
    CHECK(t.R.num_classes() == 1);
  }
  SUBCASE("Brandt monoid with diagonal idempotents") {
    BrandtMonoid b = brandt(cyclic_group(2), 2, true);
    const FiniteMonoid& m = b.monoid;
    std::vector<ElementId> E{b.view.triple(0, 0, 0), b.view.triple(1, 0, 1),
                             *b.view.zero()};
    TildeRelations t = tilde_relations(m, E);
    // triples are ~R_E-related iff they share the first index; {1} and {0}
    // are singletons
    for (ElementId x = 0; x < static_cast<ElementId>(m.size()); ++x) {
      for (ElementId y = 0; y < static_cast<ElementId>(m.size()); ++y) {
        bool related = t.R.same(x, y);
        bool xt = b.view.is_triple(x), yt = b.view.is_triple(y);
        if (xt && yt) {
          CHECK(related == (b.view.row_of(x) == b.view.row_of(y)));
        } else if (x != y) {
          CHECK(!related);
        }
      }
    }
    CHECK(t.H == t.R.meet(t.L));
  }
  SUBCASE("regular monoid with E = E(S) recovers Green's relations") {
    std::mt19937 rng(3);
    for (int k = 0; k < 40; ++k) {
      FiniteMonoid m = random_regular_monoid(rng);
      TildeRelations t = tilde_relations(m, m.idempotents());
      GreenStructure g = green(m);
      CHECK(t.R == g.R);
      CHECK(t.L == g.L);
      CHECK(t.H == g.H);
    }
  }
  SUBCASE("R refines ~R_E for arbitrary E") {
    std::mt19937 rng(5);
    RandomMonoidOptions opt;
    for (int k = 0; k < 25; ++k) {
      FiniteMonoid m = random_monoid(rng, opt);
      auto idems = m.idempotents();
      std::vector<ElementId> E;
      for (size_t i = 0; i < idems.size(); i += 2) E.push_back(idems[i]);
      if (E.empty()) E.push_back(m.identity());
      TildeRelations t = tilde_relations(m, E);
      GreenStructure g = green(m);
      CHECK(g.R.refines(t.R));
      CHECK(g.L.refines(t.L));
      CHECK(g.H.refines(t.H));
    }
  }
  SUBCASE("non-idempotent in E is rejected") {
    FiniteMonoid z3 = cyclic_group(3);
    CHECK_THROWS_AS(tilde_relations(z3, {1}), std::invalid_argument);
  }
}

TEST_CASE("unitary status on finite monoids") {
  SUBCASE("T = S is always unitary") {
    FiniteMonoid u2 = u2_monoid();
    UnitaryStatus st = unitary_status(u2, {0, 1});
    CHECK(st.left_unitary);
    CHECK(st.weakly_left_unitary);
  }
  SUBCASE("Brandt monoid, T = {1, (1,1,1)}") {
    BrandtMonoid b = brandt(trivial_monoid(), 2, true);
    std::vector<ElementId> T{b.view.triple(0, 0, 0), *b.view.one()};
    std::sort(T.begin(), T.end());
    UnitaryStatus st = unitary_status(b.monoid, T);
    CHECK(st.left_unitary);
    CHECK(st.weakly_left_unitary);
  }
  SUBCASE("left unitary implies weakly left unitary on random instances") {
    std::mt19937 rng(17);
    RandomMonoidOptions opt;
    for (int k = 0; k < 60; ++k) {
      FiniteMonoid m = random_monoid(rng, opt);
      auto T = random_subsemigroup(rng, m);
      if (!subsemigroup_identity(m, T)) continue;
      UnitaryStatus st = unitary_status(m, T);
      if (st.left_unitary) CHECK(st.weakly_left_unitary);
    }
  }
  SUBCASE("rejects non-subsemigroups and identityless T") {
    FiniteMonoid z3 = cyclic_group(3);
    CHECK_THROWS_AS(unitary_status(z3, {1}), std::invalid_argument);
  }
}
