#ifndef COACT_FINITE_MONOID_HPP_
#define COACT_FINITE_MONOID_HPP_

#include <optional>
#include <string>
#include <vector>

#include "coact/partition.hpp"

namespace coact {

/// A finite monoid given by its full multiplication table.  Immutable after
/// construction; all operations on it are pure.
class FiniteMonoid {
 public:
  /// table is row-major: table[a * size + b] = a * b.  Labels default to
  /// s0, s1, ...  The constructor checks shape only; call validate() for
  /// the algebraic laws.
  FiniteMonoid(size_t size, std::vector<ElementId> table, ElementId identity,
               std::optional<ElementId> zero = std::nullopt,
               std::vector<std::string> labels = {});

  size_t size() const { return size_; }
  ElementId product(ElementId a, ElementId b) const {
    return table_[static_cast<size_t>(a) * size_ + b];
  }
  ElementId identity() const { return identity_; }
  std::optional<ElementId> zero() const { return zero_; }

  const std::string& label(ElementId a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Element with the given label, if any.
  std::optional<ElementId> element_of(const std::string& label) const;

  /// Checks associativity, the identity law, and (when present) the zero
  /// law by exhaustive scan.  Returns a description of the first violation,
  /// or nullopt when the table is a monoid.
  std::optional<std::string> validate() const;

  bool is_idempotent(ElementId a) const { return product(a, a) == a; }
  std::vector<ElementId> idempotents() const;

  std::vector<ElementId> right_ideal_of(ElementId a) const;      // aS
  std::vector<ElementId> left_ideal_of(ElementId a) const;       // Sa
  std::vector<ElementId> two_sided_ideal_of(ElementId a) const;  // SaS

 private:
  size_t size_;
  std::vector<ElementId> table_;
  ElementId identity_;
  std::optional<ElementId> zero_;
  std::vector<std::string> labels_;
};

/// Natural partial order on idempotents: e <= f iff ef = fe = e.
/// Throws std::invalid_argument if either argument is not idempotent.
bool natural_order(const FiniteMonoid& m, ElementId e, ElementId f);

struct RegularityResult {
  bool regular;
  std::optional<ElementId> witness;  // a non-regular element when !regular
};

RegularityResult regularity(const FiniteMonoid& m);
bool is_regular(const FiniteMonoid& m);
/// Regular with a unique idempotent in each R-class and each L-class.
bool is_inverse(const FiniteMonoid& m);

struct GreenStructure {
  Partition R, L, H, D, J;
  // leq_j[a * n + b] <=> SaS is contained in SbS
  std::vector<uint8_t> leq_j;
  bool leq(ElementId a, ElementId b) const {
    return leq_j[static_cast<size_t>(a) * n + b] != 0;
  }
  size_t n = 0;
};

/// Green's relations from explicit principal ideal comparisons.
GreenStructure green(const FiniteMonoid& m);

struct TildeRelations {
  std::vector<ElementId> E;
  Partition R, L, H;  // ~R_E, ~L_E, ~H_E
};

/// Idempotent-set-relative analogues of Green's relations: a ~R_E b iff
/// every e in E fixes a on the left exactly when it fixes b.
/// Throws if E contains a non-idempotent.
TildeRelations tilde_relations(const FiniteMonoid& m, std::vector<ElementId> E);

struct UnitaryWitness {
  ElementId a, b;  // a and the product are in T but the required element is not
};

struct UnitaryStatus {
  bool left_unitary = false;
  bool weakly_left_unitary = false;
  bool right_unitary = false;
  bool weakly_right_unitary = false;
  std::optional<UnitaryWitness> left_witness;
  std::optional<UnitaryWitness> weak_left_witness;
  std::optional<UnitaryWitness> right_witness;
  std::optional<UnitaryWitness> weak_right_witness;
  ElementId subsemigroup_identity = -1;
};

/// T must be a subsemigroup possessing an identity e (et = te = t for all
/// t in T); throws otherwise.  Verdicts are exact for finite monoids.
UnitaryStatus unitary_status(const FiniteMonoid& m,
                             const std::vector<ElementId>& T);

bool is_subsemigroup(const FiniteMonoid& m, const std::vector<ElementId>& T);
/// Identity of the subsemigroup T, if one exists inside T.
std::optional<ElementId> subsemigroup_identity(const FiniteMonoid& m,
                                               const std::vector<ElementId>& T);

}  // namespace coact

#endif  // COACT_FINITE_MONOID_HPP_
