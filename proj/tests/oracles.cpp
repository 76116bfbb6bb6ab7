#include "oracles.hpp"

#include <deque>
#include <stdexcept>

namespace coact::oracles {

Partition hseq_closure(const FiniteRightAct& act, const PairSet& pairs) {
  size_t n = act.size();
  std::vector<std::vector<ElementId>> adj(n);
  for (const auto& [c, d] : pairs.symmetric()) {
    for (ElementId t = 0; t < static_cast<ElementId>(act.monoid().size());
         ++t) {
      ElementId u = act.act(c, t);
      ElementId v = act.act(d, t);
      if (u != v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
    }
  }
  std::vector<int32_t> comp(n, -1);
  int32_t next = 0;
  for (size_t start = 0; start < n; ++start) {
    if (comp[start] != -1) continue;
    comp[start] = next;
    std::deque<ElementId> queue{static_cast<ElementId>(start)};
    while (!queue.empty()) {
      ElementId u = queue.front();
      queue.pop_front();
      for (ElementId v : adj[u]) {
        if (comp[v] == -1) {
          comp[v] = next;
          queue.push_back(v);
        }
      }
    }
    ++next;
  }
  return Partition(std::move(comp));
}

std::vector<ElementSet> all_subacts_brute(const FiniteRightAct& act) {
  if (act.size() > 16) {
    throw std::invalid_argument("all_subacts_brute: carrier too large");
  }
  size_t n = act.size();
  auto k = static_cast<ElementId>(act.monoid().size());
  std::vector<ElementSet> out;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool closed = true;
    for (size_t a = 0; a < n && closed; ++a) {
      if (!(mask & (1u << a))) continue;
      for (ElementId s = 0; s < k && closed; ++s) {
        closed = (mask & (1u << act.act(static_cast<ElementId>(a), s))) != 0;
      }
    }
    if (!closed) continue;
    ElementSet set;
    for (size_t a = 0; a < n; ++a) {
      if (mask & (1u << a)) set.push_back(static_cast<ElementId>(a));
    }
    out.push_back(std::move(set));
  }
  return out;
}

}  // namespace coact::oracles
