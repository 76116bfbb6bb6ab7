#include "coact/subact.hpp"

#include <algorithm>
#include <stdexcept>

namespace coact {

ElementSet sorted_unique(ElementSet v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool contains(const ElementSet& set, ElementId a) {
  return std::binary_search(set.begin(), set.end(), a);
}

ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

ElementSet subact_generated(const FiniteRightAct& act, const ElementSet& gens) {
  std::vector<uint8_t> in(act.size(), 0);
  for (ElementId g : gens) {
    for (ElementId s = 0; s < static_cast<ElementId>(act.monoid().size());
         ++s) {
      in[act.act(g, s)] = 1;
    }
  }
  ElementSet out;
  for (size_t a = 0; a < act.size(); ++a) {
    if (in[a]) out.push_back(static_cast<ElementId>(a));
  }
  return out;
}

bool is_subact(const FiniteRightAct& act, const ElementSet& set) {
  for (ElementId a : set) {
    for (ElementId s = 0; s < static_cast<ElementId>(act.monoid().size());
         ++s) {
      if (!contains(set, act.act(a, s))) return false;
    }
  }
  return true;
}

ElementSet minimal_generating_set(const FiniteRightAct& act,
                                  const ElementSet& subact) {
  if (subact.empty()) return {};
  // reachability preorder: a >= b iff b in aS
  size_t n = subact.size();
  std::vector<std::vector<uint8_t>> reach(n, std::vector<uint8_t>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    ElementSet orbit = subact_generated(act, {subact[i]});
    for (size_t j = 0; j < n; ++j) reach[i][j] = contains(orbit, subact[j]);
  }
  // classes of mutual reachability; a class is maximal when nothing outside
  // it reaches into it
  std::vector<int> cls(n, -1);
  int num = 0;
  for (size_t i = 0; i < n; ++i) {
    if (cls[i] != -1) continue;
    cls[i] = num;
    for (size_t j = i + 1; j < n; ++j) {
      if (reach[i][j] && reach[j][i]) cls[j] = num;
    }
    ++num;
  }
  ElementSet gens;
  std::vector<uint8_t> done(num, 0);
  for (size_t i = 0; i < n; ++i) {
    if (done[cls[i]]) continue;
    done[cls[i]] = 1;  // least-index representative of this class
    bool maximal = true;
    for (size_t j = 0; j < n && maximal; ++j) {
      if (cls[j] != cls[i] && reach[j][i]) maximal = false;
    }
    if (maximal) gens.push_back(subact[i]);
  }
  if (subact_generated(act, gens) != subact) {
    throw std::logic_error("minimal_generating_set: generation failed");
  }
  for (size_t k = 0; k < gens.size(); ++k) {
    ElementSet reduced;
    for (size_t j = 0; j < gens.size(); ++j) {
      if (j != k) reduced.push_back(gens[j]);
    }
    if (subact_generated(act, reduced) == subact) {
      throw std::logic_error("minimal_generating_set: not minimal");
    }
  }
  return gens;
}

ElementSet rho_closure(const FiniteRightAct& act, const ElementSet& subact,
                       const Partition& rho) {
  std::vector<uint8_t> hit(rho.num_classes(), 0);
  for (ElementId a : subact) hit[rho.class_of(a)] = 1;
  ElementSet out;
  for (size_t a = 0; a < act.size(); ++a) {
    if (hit[rho.class_of(static_cast<ElementId>(a))]) {
      out.push_back(static_cast<ElementId>(a));
    }
  }
  return out;
}

ElementSet ideal_quotient(const FiniteRightAct& act, const ElementSet& subact,
                          ElementId x) {
  ElementSet out;
  for (ElementId t = 0; t < static_cast<ElementId>(act.monoid().size()); ++t) {
    if (contains(subact, act.act(x, t))) out.push_back(t);
  }
  return out;
}

}  // namespace coact
