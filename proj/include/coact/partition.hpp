#ifndef COACT_PARTITION_HPP_
#define COACT_PARTITION_HPP_

#include <cstdint>
#include <vector>

namespace coact {

// Dense handle into a finite carrier (monoid or act).
using ElementId = int32_t;

/// An equivalence relation on {0, ..., n-1}, stored as a class id per
/// element.  Class ids are normalized so that classes are numbered in order
/// of their least element; two Partitions over the same carrier are equal
/// iff they define the same relation.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int32_t> raw_class_of);

  static Partition identity(size_t n);
  static Partition universal(size_t n);

  size_t size() const { return class_of_.size(); }
  int32_t num_classes() const { return num_classes_; }
  int32_t class_of(ElementId a) const { return class_of_[a]; }
  bool same(ElementId a, ElementId b) const {
    return class_of_[a] == class_of_[b];
  }
  /// Least element of a class.
  ElementId representative(int32_t cls) const { return reps_[cls]; }
  std::vector<std::vector<ElementId>> classes() const;
  std::vector<ElementId> class_members(int32_t cls) const;

  /// True iff every class of *this lies inside a class of coarser.
  bool refines(const Partition& coarser) const;
  Partition meet(const Partition& other) const;
  Partition join(const Partition& other) const;

  bool operator==(const Partition& other) const {
    return class_of_ == other.class_of_;
  }
  bool operator!=(const Partition& other) const { return !(*this == other); }

 private:
  void normalize();

  std::vector<int32_t> class_of_;
  std::vector<ElementId> reps_;
  int32_t num_classes_ = 0;
};

/// Plain union-find over {0, ..., n-1}; the workhorse behind congruence
/// closure and partition joins.
class UnionFind {
 public:
  explicit UnionFind(size_t n);
  ElementId find(ElementId a);
  /// Returns true if a and b were in distinct classes (i.e. a merge happened).
  bool unite(ElementId a, ElementId b);
  Partition to_partition();

 private:
  std::vector<ElementId> parent_;
  std::vector<int32_t> rank_;
};

}  // namespace coact

#endif  // COACT_PARTITION_HPP_
