#include "coact/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace coact {

Partition::Partition(std::vector<int32_t> raw_class_of)
    : class_of_(std::move(raw_class_of)) {
  normalize();
}

void Partition::normalize() {
  std::vector<int32_t> remap(class_of_.size(), -1);
  reps_.clear();
  num_classes_ = 0;
  for (size_t a = 0; a < class_of_.size(); ++a) {
    int32_t raw = class_of_[a];
    if (raw < 0 || static_cast<size_t>(raw) >= class_of_.size()) {
      throw std::invalid_argument("Partition: class id out of range");
    }
    if (remap[raw] == -1) {
      remap[raw] = num_classes_++;
      reps_.push_back(static_cast<ElementId>(a));
    }
    class_of_[a] = remap[raw];
  }
}

Partition Partition::identity(size_t n) {
  std::vector<int32_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Partition(std::move(v));
}

Partition Partition::universal(size_t n) {
  return Partition(std::vector<int32_t>(n, 0));
}

std::vector<std::vector<ElementId>> Partition::classes() const {
  std::vector<std::vector<ElementId>> out(num_classes_);
  for (size_t a = 0; a < class_of_.size(); ++a) {
    out[class_of_[a]].push_back(static_cast<ElementId>(a));
  }
  return out;
}

std::vector<ElementId> Partition::class_members(int32_t cls) const {
  std::vector<ElementId> out;
  for (size_t a = 0; a < class_of_.size(); ++a) {
    if (class_of_[a] == cls) out.push_back(static_cast<ElementId>(a));
  }
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.size() != size()) {
    throw std::invalid_argument("Partition::refines: size mismatch");
  }
  // same class here must imply same class there; check via representatives
  std::vector<int32_t> image(num_classes_, -1);
  for (size_t a = 0; a < class_of_.size(); ++a) {
    int32_t c = class_of_[a];
    if (image[c] == -1) {
      image[c] = coarser.class_of_[a];
    } else if (image[c] != coarser.class_of_[a]) {
      return false;
    }
  }
  return true;
}

Partition Partition::meet(const Partition& other) const {
  if (other.size() != size()) {
    throw std::invalid_argument("Partition::meet: size mismatch");
  }
  std::vector<int32_t> out(size());
  std::vector<std::pair<int32_t, int32_t>> seen;
  for (size_t a = 0; a < size(); ++a) {
    std::pair<int32_t, int32_t> key{class_of_[a], other.class_of_[a]};
    auto it = std::find(seen.begin(), seen.end(), key);
    if (it == seen.end()) {
      out[a] = static_cast<int32_t>(seen.size());
      seen.push_back(key);
    } else {
      out[a] = static_cast<int32_t>(it - seen.begin());
    }
  }
  return Partition(std::move(out));
}

Partition Partition::join(const Partition& other) const {
  if (other.size() != size()) {
    throw std::invalid_argument("Partition::join: size mismatch");
  }
  UnionFind uf(size());
  for (size_t a = 0; a < size(); ++a) {
    uf.unite(representative(class_of_[a]), static_cast<ElementId>(a));
    uf.unite(other.representative(other.class_of_[a]), static_cast<ElementId>(a));
  }
  return uf.to_partition();
}

UnionFind::UnionFind(size_t n) : parent_(n), rank_(n, 0) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

ElementId UnionFind::find(ElementId a) {
  ElementId root = a;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[a] != root) {
    ElementId next = parent_[a];
    parent_[a] = root;
    a = next;
  }
  return root;
}

bool UnionFind::unite(ElementId a, ElementId b) {
  ElementId ra = find(a), rb = find(b);
  if (ra == rb) return false;
  if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
  parent_[rb] = ra;
  if (rank_[ra] == rank_[rb]) ++rank_[ra];
  return true;
}

Partition UnionFind::to_partition() {
  std::vector<int32_t> v(parent_.size());
  for (size_t a = 0; a < parent_.size(); ++a) {
    v[a] = find(static_cast<ElementId>(a));
  }
  return Partition(std::move(v));
}

}  // namespace coact
