#include "coact/srcep.hpp"

#include <sstream>
#include <stdexcept>

namespace coact {

namespace {

void require_in_T(const std::vector<ElementId>& T, const PairSet& pairs,
                  const FiniteMonoid& s) {
  std::vector<uint8_t> in(s.size(), 0);
  for (ElementId t : T) in[t] = 1;
  for (const auto& [a, b] : pairs.pairs) {
    if (!in[a] || !in[b]) {
      throw std::invalid_argument("congruence pair outside T: (" +
                                  s.label(a) + "," + s.label(b) + ")");
    }
  }
}

}  // namespace

ActCongruence extend_congruence(const FiniteMonoid& s,
                                const std::vector<ElementId>& T,
                                const PairSet& pairs) {
  require_in_T(T, pairs, s);
  FiniteRightAct sact = monoid_act(s);
  return congruence_closure(sact, pairs);
}

Partition restrict_congruence(const Partition& rho_s,
                              const std::vector<ElementId>& T) {
  std::vector<int32_t> cls(T.size());
  for (size_t i = 0; i < T.size(); ++i) cls[i] = rho_s.class_of(T[i]);
  // renumber within T
  std::vector<int32_t> remap(rho_s.num_classes(), -1);
  int32_t next = 0;
  for (auto& c : cls) {
    if (remap[c] == -1) remap[c] = next++;
    c = remap[c];
  }
  return Partition(std::move(cls));
}

SrcepResult srcep_check(const FiniteMonoid& s, const std::vector<ElementId>& T,
                        const PairSet& pairs) {
  if (!is_subsemigroup(s, T)) {
    throw std::invalid_argument("srcep_check: T is not a subsemigroup");
  }
  require_in_T(T, pairs, s);

  SrcepResult out;
  FiniteRightAct sact = monoid_act(s);
  out.rho_T = closure_on_subset(sact, T, pairs);
  ActCongruence ext = congruence_closure(sact, pairs);
  out.rho_S = ext.partition();
  Partition restricted = restrict_congruence(out.rho_S, T);

  out.restriction_exact = out.rho_T == restricted;
  if (!out.restriction_exact) {
    for (size_t i = 0; i < T.size() && out.witnesses.empty(); ++i) {
      for (size_t j = i + 1; j < T.size(); ++j) {
        if (out.rho_T.same(static_cast<ElementId>(i),
                           static_cast<ElementId>(j)) !=
            restricted.same(static_cast<ElementId>(i),
                            static_cast<ElementId>(j))) {
          std::ostringstream os;
          os << "restriction differs at (" << s.label(T[i]) << ","
             << s.label(T[j]) << ")";
          out.witnesses.push_back(os.str());
          break;
        }
      }
    }
  }

  out.union_of_classes = true;
  std::vector<uint8_t> in(s.size(), 0);
  for (ElementId t : T) in[t] = 1;
  for (ElementId t : T) {
    for (ElementId x = 0; x < static_cast<ElementId>(s.size()); ++x) {
      if (out.rho_S.same(t, x) && !in[x]) {
        out.union_of_classes = false;
        std::ostringstream os;
        os << s.label(t) << " is related to " << s.label(x) << " outside T";
        out.witnesses.push_back(os.str());
        break;
      }
    }
    if (!out.union_of_classes) break;
  }
  return out;
}

}  // namespace coact
