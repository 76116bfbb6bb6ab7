#ifndef COACT_ACT_HPP_
#define COACT_ACT_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coact/finite-monoid.hpp"

namespace coact {

using MonoidPtr = std::shared_ptr<const FiniteMonoid>;

/// A finite right act: a carrier together with a carrier x monoid action
/// table.  Shares ownership of its monoid, so acts can outlive the
/// expression they were built from.  Immutable after construction.
class FiniteRightAct {
 public:
  FiniteRightAct(MonoidPtr m, size_t size, std::vector<ElementId> table,
                 std::vector<std::string> labels = {});

  const FiniteMonoid& monoid() const { return *monoid_; }
  const MonoidPtr& monoid_ptr() const { return monoid_; }
  size_t size() const { return size_; }
  ElementId act(ElementId a, ElementId s) const {
    return table_[static_cast<size_t>(a) * monoid_->size() + s];
  }
  const std::string& label(ElementId a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<ElementId> element_of(const std::string& label) const;

  /// Checks a*1 = a and a*(st) = (a*s)*t exhaustively; returns the first
  /// violation or nullopt.
  std::optional<std::string> validate() const;

 private:
  MonoidPtr monoid_;
  size_t size_;
  std::vector<ElementId> table_;
  std::vector<std::string> labels_;
};

/// S acting on itself; labels inherited from the monoid.
FiniteRightAct monoid_act(FiniteMonoid m);
FiniteRightAct monoid_act(MonoidPtr m);

/// Free act basis x monoid, element (x, s) at index x*|S| + s.
struct FreeActView {
  size_t basis_size, monoid_size;
  ElementId elem(int basis, ElementId s) const {
    return static_cast<ElementId>(basis * monoid_size + s);
  }
  int basis_of(ElementId a) const { return static_cast<int>(a / monoid_size); }
  ElementId scalar_of(ElementId a) const {
    return static_cast<ElementId>(a % monoid_size);
  }
};

struct FreeAct {
  FiniteRightAct act;
  FreeActView view;
  std::vector<std::string> basis;
};

FreeAct free_act(FiniteMonoid m, std::vector<std::string> basis);
FreeAct free_act(MonoidPtr m, std::vector<std::string> basis);

}  // namespace coact

#endif  // COACT_ACT_HPP_
