#include <stdexcept>
#include "coact/act.hpp"
#include "coact/congruence.hpp"
#include "coact/constructions.hpp"
#include "coact/random-monoid.hpp"
#include "coact/subact.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace coact;

namespace {

// act with |A| <= cap for the oracle-equivalence property runs
FiniteRightAct random_act(std::mt19937& rng, const FiniteMonoid& m,
                          size_t cap) {
  std::uniform_int_distribution<int> kind(0, 2);
  int k = kind(rng);
  if (k == 0 && m.size() <= cap) return monoid_act(m);
  size_t basis = std::max<size_t>(1, cap / m.size());
  basis = std::min<size_t>(basis, 2);
  std::vector<std::string> names;
  for (size_t i = 0; i < basis; ++i) names.push_back("x" + std::to_string(i));
  FreeAct fa = free_act(m, names);
  if (k == 2) {
    // quotient by one random pair to vary the shape
    PairSet h = random_pairs(rng, fa.act.size(), 1);
    if (!h.empty()) {
      auto rho = congruence_closure(fa.act, h);
      return quotient_act(fa.act, rho.partition());
    }
  }
  return std::move(fa.act);
}

}  // namespace

TEST_CASE("free acts") {
  FiniteMonoid u2 = u2_monoid();
  FreeAct fa = free_act(u2, {"x"});
  CHECK(fa.act.size() == 2);
  ElementId x1 = fa.view.elem(0, u2.identity());
  ElementId xe = fa.view.elem(0, *u2.element_of("e"));
  CHECK(fa.act.act(x1, *u2.element_of("e")) == xe);
  CHECK(!fa.act.validate().has_value());

  FreeAct f2 = free_act(cyclic_group(2), {"x", "y"});
  CHECK(f2.act.size() == 4);

  // defining law (x, s) * t = (x, st) on samples
  FiniteMonoid z3 = cyclic_group(3);
  FreeAct f3 = free_act(z3, {"x", "y"});
  for (ElementId s = 0; s < 3; ++s) {
    for (ElementId t = 0; t < 3; ++t) {
      CHECK(f3.act.act(f3.view.elem(1, s), t) ==
            f3.view.elem(1, z3.product(s, t)));
    }
  }
}

TEST_CASE("congruence closure basics") {
  SUBCASE("empty generating set gives the identity partition") {
    FiniteRightAct a = monoid_act(u2_monoid());
    auto c = congruence_closure(a, {});
    CHECK(c.partition() == Partition::identity(a.size()));
  }
  SUBCASE("(1,0) collapses the Brandt monoid") {
    BrandtMonoid b = brandt(trivial_monoid(), 2, true);
    FiniteRightAct a = monoid_act(b.monoid);
    PairSet h;
    h.add(*b.view.one(), *b.view.zero());
    auto c = congruence_closure(a, h);
    CHECK(c.num_classes() == 1);
  }
  SUBCASE("U2 with (1,e) is universal") {
    FiniteRightAct a = monoid_act(u2_monoid());
    PairSet h;
    h.add(0, 1);
    auto c = congruence_closure(a, h);
    CHECK(c.num_classes() == 1);
    CHECK(c.partition() == oracles::hseq_closure(a, h));
  }
}

TEST_CASE("closure equals the H-sequence oracle on random instances") {
  std::mt19937 rng(2024);
  RandomMonoidOptions opt;
  opt.max_size = 8;
  for (int k = 0; k < 60; ++k) {
    FiniteMonoid m = random_monoid(rng, opt);
    FiniteRightAct a = random_act(rng, m, 12);
    PairSet h = random_pairs(rng, a.size(), 4);
    auto closure = congruence_closure(a, h);
    CHECK(closure.partition() == oracles::hseq_closure(a, h));
    CHECK(is_act_congruence(a, closure.partition()));
  }
}

TEST_CASE("generator-restricted propagation matches full propagation") {
  // Brandt monoids are generated by few elements; propagate by them only
  std::mt19937 rng(99);
  BrandtMonoid b = brandt(cyclic_group(2), 2, true);
  FiniteRightAct a = monoid_act(b.monoid);
  std::vector<ElementId> gens{b.view.triple(0, 1, 0), b.view.triple(0, 0, 1),
                              b.view.triple(1, 0, 0), *b.view.one(),
                              *b.view.zero()};
  for (int k = 0; k < 20; ++k) {
    PairSet h = random_pairs(rng, a.size(), 3);
    auto full = congruence_closure(a, h);
    auto restricted = congruence_closure(a, h, &gens);
    CHECK(full.partition() == restricted.partition());
  }
}

TEST_CASE("closure properties") {
  std::mt19937 rng(4242);
  RandomMonoidOptions opt;
  opt.max_size = 6;
  for (int k = 0; k < 25; ++k) {
    FiniteMonoid m = random_monoid(rng, opt);
    FiniteRightAct a = monoid_act(m);
    PairSet h = random_pairs(rng, a.size(), 3);

    SUBCASE("") {}  // keep doctest happy about nesting
    // <H> = <H-bar>
    PairSet hbar;
    for (auto [x, y] : h.symmetric()) hbar.add(x, y);
    CHECK(congruence_closure(a, h).partition() ==
          congruence_closure(a, hbar).partition());

    // monotonicity: H within H' refines
    PairSet larger = h;
    PairSet extra = random_pairs(rng, a.size(), 2);
    for (auto [x, y] : extra.pairs) larger.add(x, y);
    CHECK(congruence_closure(a, h).partition().refines(
        congruence_closure(a, larger).partition()));
  }
}

TEST_CASE("witness extraction and replay") {
  SUBCASE("reflexive pairs get the empty witness") {
    FiniteRightAct a = monoid_act(u2_monoid());
    auto c = congruence_closure(a, {});
    auto w = c.witness(1, 1);
    REQUIRE(w.has_value());
    CHECK(w->steps.empty());
    CHECK(w->replay(a, c.origin(), 1, 1));
    CHECK(!c.witness(0, 1).has_value());
  }
  SUBCASE("single step witness in U2") {
    FiniteRightAct a = monoid_act(u2_monoid());
    PairSet h;
    h.add(0, 1);  // (1, e)
    auto c = congruence_closure(a, h);
    auto w = c.witness(0, 1);
    REQUIRE(w.has_value());
    REQUIRE(w->steps.size() == 1);
    CHECK(w->steps[0].pair_index == 0);
    CHECK(w->steps[0].multiplier == u2_monoid().identity());
    CHECK(w->replay(a, h, 0, 1));
  }
  SUBCASE("derived witness in the Brandt monoid") {
    BrandtMonoid b = brandt(trivial_monoid(), 2, true);
    FiniteRightAct a = monoid_act(b.monoid);
    PairSet h;
    h.add(*b.view.one(), *b.view.zero());
    auto c = congruence_closure(a, h);
    ElementId t12 = b.view.triple(0, 0, 1);
    auto w = c.witness(t12, *b.view.zero());
    REQUIRE(w.has_value());
    CHECK(w->replay(a, h, t12, *b.view.zero()));
  }
  SUBCASE("witnesses replay on random instances") {
    std::mt19937 rng(31337);
    RandomMonoidOptions opt;
    opt.max_size = 7;
    for (int k = 0; k < 30; ++k) {
      FiniteMonoid m = random_monoid(rng, opt);
      FiniteRightAct a = monoid_act(m);
      PairSet h = random_pairs(rng, a.size(), 3);
      auto c = congruence_closure(a, h);
      for (ElementId x = 0; x < static_cast<ElementId>(a.size()); ++x) {
        for (ElementId y = 0; y < static_cast<ElementId>(a.size()); ++y) {
          auto w = c.witness(x, y);
          CHECK(w.has_value() == c.related(x, y));
          if (w) CHECK(w->replay(a, h, x, y));
        }
      }
    }
  }
}

TEST_CASE("quotient acts") {
  FiniteMonoid m = u2_monoid();
  FiniteRightAct a = monoid_act(m);
  SUBCASE("identity congruence reproduces the act") {
    FiniteRightAct q = quotient_act(a, Partition::identity(a.size()));
    CHECK(q.size() == a.size());
  }
  SUBCASE("universal congruence gives the one-element act") {
    FiniteRightAct q = quotient_act(a, Partition::universal(a.size()));
    CHECK(q.size() == 1);
  }
  SUBCASE("class count matches") {
    PairSet h;
    h.add(0, 1);
    auto c = congruence_closure(a, h);
    CHECK(quotient_act(a, c.partition()).size() ==
          static_cast<size_t>(c.num_classes()));
  }
  SUBCASE("non-congruences are rejected") {
    BrandtMonoid b = brandt(trivial_monoid(), 2, true);
    FiniteRightAct ba = monoid_act(b.monoid);
    // {1, 0} in one class but their translates are not identified
    std::vector<int32_t> cls(ba.size());
    for (size_t i = 0; i < ba.size(); ++i) cls[i] = static_cast<int32_t>(i);
    cls[*b.view.one()] = cls[*b.view.zero()];
    CHECK_THROWS_AS(quotient_act(ba, Partition(std::move(cls))),
                    std::invalid_argument);
  }
}

TEST_CASE("annihilators") {
  SUBCASE("free basis elements have trivial annihilator") {
    FiniteMonoid z3 = cyclic_group(3);
    FreeAct fa = free_act(z3, {"x"});
    Partition ann =
        annihilator_of_element(fa.act, fa.view.elem(0, z3.identity()));
    CHECK(ann == Partition::identity(z3.size()));
  }
  SUBCASE("Brandt element annihilator by direct scan") {
    BrandtMonoid b = brandt(trivial_monoid(), 2, true);
    FiniteRightAct a = monoid_act(b.monoid);
    ElementId e = b.view.triple(0, 0, 0);
    Partition ann = annihilator_of_element(a, e);
    for (ElementId u = 0; u < static_cast<ElementId>(a.size()); ++u) {
      for (ElementId v = 0; v < static_cast<ElementId>(a.size()); ++v) {
        CHECK(ann.same(u, v) ==
              (b.monoid.product(e, u) == b.monoid.product(e, v)));
      }
    }
  }
  SUBCASE("S / ann(a) is isomorphic to aS") {
    std::mt19937 rng(55);
    RandomMonoidOptions opt;
    opt.max_size = 7;
    for (int k = 0; k < 20; ++k) {
      FiniteMonoid m = random_monoid(rng, opt);
      FiniteRightAct a = monoid_act(m);
      for (ElementId x = 0; x < static_cast<ElementId>(m.size()); ++x) {
        Partition ann = annihilator_of_element(a, x);
        ElementSet orbit = subact_generated(a, {x});
        CHECK(static_cast<size_t>(ann.num_classes()) == orbit.size());
        // the bijection maps the class of u to x*u and is S-equivariant
        FiniteRightAct q = quotient_act(a, ann);
        auto phi = [&](int32_t c) {
          return m.product(x, ann.representative(c));
        };
        for (int32_t c = 0; c < ann.num_classes(); ++c) {
          CHECK(contains(orbit, phi(c)));
          for (ElementId s = 0; s < static_cast<ElementId>(m.size()); ++s) {
            CHECK(phi(q.act(c, s)) == m.product(phi(c), s));
          }
        }
      }
    }
  }
}

TEST_CASE("irredundant congruence generators") {
  std::mt19937 rng(808);
  RandomMonoidOptions opt;
  opt.max_size = 6;
  for (int k = 0; k < 20; ++k) {
    FiniteMonoid m = random_monoid(rng, opt);
    FiniteRightAct a = monoid_act(m);
    PairSet h = random_pairs(rng, a.size(), 3);
    Partition target = congruence_closure(a, h).partition();
    PairSet gens = congruence_generators(a, target);
    CHECK(congruence_closure(a, gens).partition() == target);
    // irredundant: dropping any kept pair loses the congruence
    for (size_t drop = 0; drop < gens.size(); ++drop) {
      PairSet reduced;
      for (size_t i = 0; i < gens.size(); ++i) {
        if (i != drop) reduced.add(gens.pairs[i].first, gens.pairs[i].second);
      }
      CHECK(congruence_closure(a, reduced).partition() != target);
    }
  }
}

TEST_CASE("closure on a subsemigroup") {
  FiniteMonoid s = adjoin_identity(u2_monoid());
  FiniteRightAct a = monoid_act(s);
  // T = the copy of U2 inside U2^1
  std::vector<ElementId> T{0, 1};
  PairSet h;
  h.add(0, 1);
  Partition p = closure_on_subset(a, T, h);
  CHECK(p.num_classes() == 1);

  SUBCASE("whole monoid matches congruence_closure") {
    std::vector<ElementId> all{0, 1, 2};
    Partition q = closure_on_subset(a, all, h);
    CHECK(q == congruence_closure(a, h).partition());
  }
  SUBCASE("pairs outside T are rejected") {
    PairSet bad;
    bad.add(0, 2);
    CHECK_THROWS_AS(closure_on_subset(a, T, bad), std::invalid_argument);
  }
}
