// Internal helpers shared by the harness translation units.
#ifndef COACT_SRC_HARNESS_UTIL_HPP_
#define COACT_SRC_HARNESS_UTIL_HPP_

#include <sstream>
#include <string>

#include "coact/congruence.hpp"
#include "coact/subact.hpp"
#include "json.hpp"

namespace coact::detail {

inline std::string render_set(const FiniteRightAct& act, const ElementSet& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += act.label(s[i]);
  }
  return out + "}";
}

inline nlohmann::json set_json(const FiniteRightAct& act, const ElementSet& s) {
  nlohmann::json j = nlohmann::json::array();
  for (ElementId x : s) j.push_back(act.label(x));
  return j;
}

inline nlohmann::json pairs_json(const FiniteRightAct& act, const PairSet& h) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [a, b] : h.pairs) {
    j.push_back({act.label(a), act.label(b)});
  }
  return j;
}

inline std::string pair_str(const FiniteRightAct& act, ElementId a,
                            ElementId b) {
  return "(" + act.label(a) + "," + act.label(b) + ")";
}

/// Least-index idempotent generating set of a right ideal of a regular
/// monoid: one idempotent per maximal principal right ideal.  Throws when
/// some generator has no idempotent with the same principal ideal (i.e.
/// the monoid is not regular enough for the construction).
inline ElementSet idempotent_ideal_generators(const FiniteMonoid& s,
                                              const FiniteRightAct& sact,
                                              const ElementSet& ideal) {
  ElementSet gens = minimal_generating_set(sact, ideal);
  ElementSet out;
  for (ElementId g : gens) {
    ElementSet gs = s.right_ideal_of(g);
    ElementId found = -1;
    for (ElementId e : s.idempotents()) {
      if (s.right_ideal_of(e) == gs) {
        found = e;
        break;
      }
    }
    if (found == -1) {
      throw std::logic_error(
          "no idempotent generates the principal right ideal of " +
          s.label(g));
    }
    out.push_back(found);
  }
  return sorted_unique(std::move(out));
}

/// All (u, v) pairs, u < v, of a partition's nontrivial relations.
inline PairSet partition_pairs(const Partition& p) {
  PairSet out;
  for (ElementId u = 0; u < static_cast<ElementId>(p.size()); ++u) {
    for (ElementId v = u + 1; v < static_cast<ElementId>(p.size()); ++v) {
      if (p.same(u, v)) out.add(u, v);
    }
  }
  return out;
}

}  // namespace coact::detail

#endif  // COACT_SRC_HARNESS_UTIL_HPP_
