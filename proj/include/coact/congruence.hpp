#ifndef COACT_CONGRUENCE_HPP_
#define COACT_CONGRUENCE_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "coact/act.hpp"
#include "coact/partition.hpp"

namespace coact {

/// An ordered list of generating pairs H.  The symmetric closure
/// H-bar = H u H^-1 is derived on demand and indexed so that entry k
/// (k < |H|) is H[k] and entry k + |H| is H[k] reversed.
struct PairSet {
  std::vector<std::pair<ElementId, ElementId>> pairs;

  size_t size() const { return pairs.size(); }
  bool empty() const { return pairs.empty(); }
  void add(ElementId a, ElementId b) { pairs.emplace_back(a, b); }
  std::vector<std::pair<ElementId, ElementId>> symmetric() const;
  /// Index of the reversed pair in the symmetric listing.
  size_t reverse_index(size_t k) const {
    return k < pairs.size() ? k + pairs.size() : k - pairs.size();
  }
  PairSet symmetrized() const;
};

struct WitnessStep {
  int32_t pair_index;   // into PairSet::symmetric()
  ElementId multiplier; // t with c*t = current, d*t = next
};

/// A replayable chain a = c1 t1, d1 t1 = c2 t2, ..., dn tn = b.
struct HSequenceWitness {
  std::vector<WitnessStep> steps;

  /// Checks that the steps replay to a valid chain from a to b.
  bool replay(const FiniteRightAct& act, const PairSet& origin, ElementId a,
              ElementId b) const;
};

/// The least act congruence containing a pair set, with enough provenance
/// retained to extract H-sequence witnesses.
class ActCongruence {
 public:
  const Partition& partition() const { return partition_; }
  int32_t class_of(ElementId a) const { return partition_.class_of(a); }
  bool related(ElementId a, ElementId b) const {
    return partition_.same(a, b);
  }
  int32_t num_classes() const { return partition_.num_classes(); }
  ElementId representative(int32_t cls) const {
    return partition_.representative(cls);
  }
  std::vector<std::vector<ElementId>> classes() const {
    return partition_.classes();
  }
  const PairSet& origin() const { return origin_; }

  /// A replayable witness when a and b are related (empty when a == b);
  /// nullopt when they are not.  Witness length is minimal in recorded
  /// merges, not over all H-sequences.
  std::optional<HSequenceWitness> witness(ElementId a, ElementId b) const;

 private:
  friend ActCongruence congruence_closure(const FiniteRightAct&,
                                          const PairSet&,
                                          const std::vector<ElementId>*);

  struct ForestEdge {
    ElementId to;
    int32_t pair_index;
    ElementId multiplier;
  };

  PairSet origin_;
  Partition partition_;
  std::vector<std::vector<ForestEdge>> forest_;
};

/// Union-find closure with a worklist: every merge of (a, b) enqueues
/// (a*s, b*s).  When propagate_by is supplied, the worklist multiplies by
/// those elements only (they must generate the monoid for the result to be
/// the full congruence).
ActCongruence congruence_closure(
    const FiniteRightAct& act, const PairSet& pairs,
    const std::vector<ElementId>* propagate_by = nullptr);

std::optional<HSequenceWitness> h_sequence_witness(const FiniteRightAct& act,
                                                   const PairSet& pairs,
                                                   ElementId a, ElementId b);

/// Least right congruence on a subsemigroup T of the monoid of act
/// (multipliers from T plus the bare pairs themselves).  Pairs are given as
/// global act ids lying inside T; T must be closed under the action.  The
/// result is a partition of T indexed by position in T.
Partition closure_on_subset(const FiniteRightAct& act,
                            const std::vector<ElementId>& T,
                            const PairSet& pairs);

/// True iff the partition is a right congruence on the act.
bool is_act_congruence(const FiniteRightAct& act, const Partition& p);

/// Quotient act A / rho; element i is the class with representative
/// rho.representative(i).  Throws if rho is not a congruence.
FiniteRightAct quotient_act(const FiniteRightAct& act, const Partition& rho);

/// Deterministic irredundant generating set of a right congruence: scans
/// related pairs (u, v), u < v, in index order and keeps those not already
/// implied by the pairs kept so far.
PairSet congruence_generators(const FiniteRightAct& act,
                              const Partition& target);

/// Annihilator of an act element: the right congruence {(u,v) : au = av}
/// on the monoid of A.
Partition annihilator_of_element(const FiniteRightAct& act, ElementId a);
/// ann(a rho) = {(u,v) : au rho av}.
Partition annihilator_of_class(const FiniteRightAct& act, const Partition& rho,
                               ElementId a);

}  // namespace coact

#endif  // COACT_CONGRUENCE_HPP_
