// Test-only brute-force oracles, kept independent of the library's closure
// implementation: these build explicit edge sets / do exhaustive scans and
// nothing else.
#ifndef COACT_TESTS_ORACLES_HPP_
#define COACT_TESTS_ORACLES_HPP_

#include <vector>

#include "coact/congruence.hpp"
#include "coact/subact.hpp"

namespace coact::oracles {

/// Congruence generated by H, computed as connected components of the
/// explicit graph with an edge (c*t, d*t) for every (c,d) in H-bar and
/// every monoid element t.
Partition hseq_closure(const FiniteRightAct& act, const PairSet& pairs);

/// All right ideals (= subacts of S over itself) of a small monoid by
/// explicit subset enumeration; the empty set is included.  Intended for
/// |S| <= 16.
std::vector<ElementSet> all_subacts_brute(const FiniteRightAct& act);

}  // namespace coact::oracles

#endif  // COACT_TESTS_ORACLES_HPP_
