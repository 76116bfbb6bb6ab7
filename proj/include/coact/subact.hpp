#ifndef COACT_SUBACT_HPP_
#define COACT_SUBACT_HPP_

#include <vector>

#include "coact/act.hpp"
#include "coact/congruence.hpp"

namespace coact {

/// Subacts are sorted duplicate-free element sets; the empty set is a legal
/// subact (and a legal right ideal).
using ElementSet = std::vector<ElementId>;

ElementSet sorted_unique(ElementSet v);
bool contains(const ElementSet& set, ElementId a);
ElementSet set_intersection(const ElementSet& a, const ElementSet& b);
ElementSet set_union(const ElementSet& a, const ElementSet& b);

/// Closure of gens under the action (gens themselves included via s = 1).
ElementSet subact_generated(const FiniteRightAct& act, const ElementSet& gens);
bool is_subact(const FiniteRightAct& act, const ElementSet& set);

/// Least generating set under least-index tie-breaking: one representative
/// per maximal mutual-reachability class.  Verifies minimality (dropping
/// any element loses generation) and throws on internal error.
ElementSet minimal_generating_set(const FiniteRightAct& act,
                                  const ElementSet& subact);

/// rho-closure of a right ideal (or any subact): the union of rho-classes
/// meeting it.
ElementSet rho_closure(const FiniteRightAct& act, const ElementSet& subact,
                       const Partition& rho);

/// (I, x) = {t in S : x*t in I} for a subact I of an act and x in the act;
/// a right ideal of the monoid (possibly empty).
ElementSet ideal_quotient(const FiniteRightAct& act, const ElementSet& subact,
                          ElementId x);

}  // namespace coact

#endif  // COACT_SUBACT_HPP_
