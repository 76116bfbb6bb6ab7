#ifndef COACT_SRCEP_HPP_
#define COACT_SRCEP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "coact/congruence.hpp"

namespace coact {

/// rho^S: closure in S of pairs generated inside a subsemigroup T.
/// Pairs must lie in T x T; throws otherwise.
ActCongruence extend_congruence(const FiniteMonoid& s,
                                const std::vector<ElementId>& T,
                                const PairSet& pairs);

/// Restriction of a congruence on S to T, as a partition of T (indexed by
/// position in T).
Partition restrict_congruence(const Partition& rho_s,
                              const std::vector<ElementId>& T);

struct SrcepResult {
  bool restriction_exact = false;  // <pairs>_T == rho^S intersect (T x T)
  bool union_of_classes = false;   // T is a union of rho^S-classes
  std::vector<std::string> witnesses;
  Partition rho_T;   // over T positions
  Partition rho_S;   // over S
};

/// Compares the congruence generated inside T against the restriction of
/// its extension to S, and checks that T is a union of extension classes.
SrcepResult srcep_check(const FiniteMonoid& s, const std::vector<ElementId>& T,
                        const PairSet& pairs);

}  // namespace coact

#endif  // COACT_SRCEP_HPP_
