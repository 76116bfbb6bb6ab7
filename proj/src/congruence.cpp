#include "coact/congruence.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace coact {

std::vector<std::pair<ElementId, ElementId>> PairSet::symmetric() const {
  std::vector<std::pair<ElementId, ElementId>> out(pairs);
  out.reserve(2 * pairs.size());
  for (const auto& [a, b] : pairs) out.emplace_back(b, a);
  return out;
}

PairSet PairSet::symmetrized() const {
  PairSet out;
  for (const auto& [a, b] : pairs) {
    bool have = false;
    for (const auto& [c, d] : out.pairs) {
      if ((c == a && d == b) || (c == b && d == a)) {
        have = true;
        break;
      }
    }
    if (!have) {
      out.add(a, b);
      if (a != b) out.add(b, a);
    }
  }
  return out;
}

bool HSequenceWitness::replay(const FiniteRightAct& act, const PairSet& origin,
                              ElementId a, ElementId b) const {
  auto hbar = origin.symmetric();
  ElementId current = a;
  for (const WitnessStep& step : steps) {
    if (step.pair_index < 0 ||
        static_cast<size_t>(step.pair_index) >= hbar.size()) {
      return false;
    }
    auto [c, d] = hbar[step.pair_index];
    if (act.act(c, step.multiplier) != current) return false;
    current = act.act(d, step.multiplier);
  }
  return current == b;
}

ActCongruence congruence_closure(const FiniteRightAct& act,
                                 const PairSet& pairs,
                                 const std::vector<ElementId>* propagate_by) {
  const FiniteMonoid& m = act.monoid();
  for (const auto& [a, b] : pairs.pairs) {
    if (a < 0 || static_cast<size_t>(a) >= act.size() || b < 0 ||
        static_cast<size_t>(b) >= act.size()) {
      throw std::invalid_argument("congruence_closure: pair out of range");
    }
  }

  std::vector<ElementId> multipliers;
  if (propagate_by) {
    multipliers = *propagate_by;
  } else {
    multipliers.resize(m.size());
    for (size_t s = 0; s < m.size(); ++s) {
      multipliers[s] = static_cast<ElementId>(s);
    }
  }

  ActCongruence out;
  out.origin_ = pairs;
  out.forest_.assign(act.size(), {});

  UnionFind uf(act.size());
  struct Item {
    ElementId a, b;
    int32_t pair_index;
    ElementId multiplier;
  };
  std::deque<Item> work;
  for (size_t k = 0; k < pairs.pairs.size(); ++k) {
    auto [c, d] = pairs.pairs[k];
    work.push_back(Item{c, d, static_cast<int32_t>(k), m.identity()});
  }
  while (!work.empty()) {
    Item it = work.front();
    work.pop_front();
    if (!uf.unite(it.a, it.b)) continue;
    out.forest_[it.a].push_back(
        ActCongruence::ForestEdge{it.b, it.pair_index, it.multiplier});
    out.forest_[it.b].push_back(ActCongruence::ForestEdge{
        it.a, static_cast<int32_t>(pairs.reverse_index(it.pair_index)),
        it.multiplier});
    for (ElementId s : multipliers) {
      ElementId as = act.act(it.a, s);
      ElementId bs = act.act(it.b, s);
      if (as == bs) continue;
      work.push_back(
          Item{as, bs, it.pair_index, m.product(it.multiplier, s)});
    }
  }
  out.partition_ = uf.to_partition();
  return out;
}

std::optional<HSequenceWitness> ActCongruence::witness(ElementId a,
                                                       ElementId b) const {
  if (!related(a, b)) return std::nullopt;
  HSequenceWitness w;
  if (a == b) return w;
  // BFS through the proof forest from a to b
  std::vector<int32_t> prev(forest_.size(), -1);
  std::vector<int32_t> prev_edge(forest_.size(), -1);
  std::deque<ElementId> queue{a};
  std::vector<uint8_t> seen(forest_.size(), 0);
  seen[a] = 1;
  while (!queue.empty()) {
    ElementId u = queue.front();
    queue.pop_front();
    if (u == b) break;
    for (size_t k = 0; k < forest_[u].size(); ++k) {
      const ForestEdge& e = forest_[u][k];
      if (seen[e.to]) continue;
      seen[e.to] = 1;
      prev[e.to] = u;
      prev_edge[e.to] = static_cast<int32_t>(k);
      queue.push_back(e.to);
    }
  }
  if (!seen[b]) return std::nullopt;  // should not happen when related
  std::vector<WitnessStep> rev;
  for (ElementId v = b; v != a; v = prev[v]) {
    const ForestEdge& e = forest_[prev[v]][prev_edge[v]];
    rev.push_back(WitnessStep{e.pair_index, e.multiplier});
  }
  w.steps.assign(rev.rbegin(), rev.rend());
  return w;
}

std::optional<HSequenceWitness> h_sequence_witness(const FiniteRightAct& act,
                                                   const PairSet& pairs,
                                                   ElementId a, ElementId b) {
  return congruence_closure(act, pairs).witness(a, b);
}

Partition closure_on_subset(const FiniteRightAct& act,
                            const std::vector<ElementId>& T,
                            const PairSet& pairs) {
  std::vector<int32_t> pos(act.size(), -1);
  for (size_t i = 0; i < T.size(); ++i) pos[T[i]] = static_cast<int32_t>(i);
  std::deque<std::pair<int32_t, int32_t>> work;
  for (const auto& [a, b] : pairs.pairs) {
    if (a < 0 || static_cast<size_t>(a) >= act.size() || pos[a] == -1 ||
        b < 0 || static_cast<size_t>(b) >= act.size() || pos[b] == -1) {
      throw std::invalid_argument("closure_on_subset: pair outside T");
    }
    work.emplace_back(pos[a], pos[b]);
  }
  UnionFind uf(T.size());
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    if (!uf.unite(a, b)) continue;
    for (ElementId s : T) {
      int32_t as = pos[act.act(T[a], s)];
      int32_t bs = pos[act.act(T[b], s)];
      if (as == -1 || bs == -1) {
        throw std::invalid_argument(
            "closure_on_subset: T not closed under the action");
      }
      if (as != bs) work.emplace_back(as, bs);
    }
  }
  return uf.to_partition();
}

bool is_act_congruence(const FiniteRightAct& act, const Partition& p) {
  if (p.size() != act.size()) return false;
  auto n = static_cast<ElementId>(act.size());
  auto k = static_cast<ElementId>(act.monoid().size());
  for (int32_t cls = 0; cls < p.num_classes(); ++cls) {
    auto members = p.class_members(cls);
    for (size_t i = 1; i < members.size(); ++i) {
      for (ElementId s = 0; s < k; ++s) {
        if (!p.same(act.act(members[0], s), act.act(members[i], s))) {
          return false;
        }
      }
    }
  }
  (void)n;
  return true;
}

FiniteRightAct quotient_act(const FiniteRightAct& act, const Partition& rho) {
  if (!is_act_congruence(act, rho)) {
    throw std::invalid_argument("quotient_act: not a congruence");
  }
  size_t sz = rho.num_classes();
  const FiniteMonoid& m = act.monoid();
  std::vector<ElementId> table(sz * m.size());
  std::vector<std::string> labels(sz);
  for (size_t c = 0; c < sz; ++c) {
    ElementId rep = rho.representative(static_cast<int32_t>(c));
    for (size_t s = 0; s < m.size(); ++s) {
      table[c * m.size() + s] =
          rho.class_of(act.act(rep, static_cast<ElementId>(s)));
    }
    labels[c] = "[" + act.label(rep) + "]";
  }
  return FiniteRightAct(act.monoid_ptr(), sz, std::move(table),
                        std::move(labels));
}

PairSet congruence_generators(const FiniteRightAct& act,
                              const Partition& target) {
  if (!is_act_congruence(act, target)) {
    throw std::invalid_argument("congruence_generators: not a congruence");
  }
  PairSet gens;
  auto current = congruence_closure(act, gens);
  auto n = static_cast<ElementId>(act.size());
  for (ElementId u = 0; u < n; ++u) {
    for (ElementId v = u + 1; v < n; ++v) {
      if (!target.same(u, v)) continue;
      if (current.related(u, v)) continue;
      gens.add(u, v);
      current = congruence_closure(act, gens);
    }
  }
  // a pair kept early can become redundant once later pairs arrive; strip
  // until stable so reports stay small
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = 0; k < gens.size(); ++k) {
      PairSet reduced;
      for (size_t i = 0; i < gens.size(); ++i) {
        if (i != k) reduced.add(gens.pairs[i].first, gens.pairs[i].second);
      }
      if (congruence_closure(act, reduced).partition() == target) {
        gens = std::move(reduced);
        changed = true;
        break;
      }
    }
  }
  return gens;
}

Partition annihilator_of_element(const FiniteRightAct& act, ElementId a) {
  const FiniteMonoid& m = act.monoid();
  std::vector<int32_t> cls(m.size());
  for (size_t u = 0; u < m.size(); ++u) {
    cls[u] = act.act(a, static_cast<ElementId>(u));
  }
  return Partition(std::move(cls));
}

Partition annihilator_of_class(const FiniteRightAct& act, const Partition& rho,
                               ElementId a) {
  const FiniteMonoid& m = act.monoid();
  std::vector<int32_t> cls(m.size());
  for (size_t u = 0; u < m.size(); ++u) {
    cls[u] = rho.class_of(act.act(a, static_cast<ElementId>(u)));
  }
  return Partition(std::move(cls));
}

}  // namespace coact
