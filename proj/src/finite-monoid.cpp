#include "coact/finite-monoid.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace coact {

FiniteMonoid::FiniteMonoid(size_t size, std::vector<ElementId> table,
                           ElementId identity, std::optional<ElementId> zero,
                           std::vector<std::string> labels)
    : size_(size),
      table_(std::move(table)),
      identity_(identity),
      zero_(zero),
      labels_(std::move(labels)) {
  if (size_ == 0) throw std::invalid_argument("FiniteMonoid: empty carrier");
  if (table_.size() != size_ * size_) {
    throw std::invalid_argument("FiniteMonoid: table has wrong shape");
  }
  for (ElementId x : table_) {
    if (x < 0 || static_cast<size_t>(x) >= size_) {
      throw std::invalid_argument("FiniteMonoid: table entry out of range");
    }
  }
  if (identity_ < 0 || static_cast<size_t>(identity_) >= size_) {
    throw std::invalid_argument("FiniteMonoid: identity out of range");
  }
  if (zero_ && (*zero_ < 0 || static_cast<size_t>(*zero_) >= size_)) {
    throw std::invalid_argument("FiniteMonoid: zero out of range");
  }
  if (labels_.empty()) {
    labels_.reserve(size_);
    for (size_t i = 0; i < size_; ++i) {
      labels_.push_back("s" + std::to_string(i));
    }
  }
  if (labels_.size() != size_) {
    throw std::invalid_argument("FiniteMonoid: wrong number of labels");
  }
}

std::optional<ElementId> FiniteMonoid::element_of(
    const std::string& label) const {
  for (size_t i = 0; i < size_; ++i) {
    if (labels_[i] == label) return static_cast<ElementId>(i);
  }
  return std::nullopt;
}

std::optional<std::string> FiniteMonoid::validate() const {
  auto n = static_cast<ElementId>(size_);
  for (ElementId a = 0; a < n; ++a) {
    if (product(identity_, a) != a || product(a, identity_) != a) {
      return "identity law fails at " + label(a);
    }
  }
  if (zero_) {
    for (ElementId a = 0; a < n; ++a) {
      if (product(*zero_, a) != *zero_ || product(a, *zero_) != *zero_) {
        return "zero law fails at " + label(a);
      }
    }
  }
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      ElementId ab = product(a, b);
      for (ElementId c = 0; c < n; ++c) {
        if (product(ab, c) != product(a, product(b, c))) {
          std::ostringstream os;
          os << "associativity fails at (" << label(a) << "," << label(b)
             << "," << label(c) << ")";
          return os.str();
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<ElementId> FiniteMonoid::idempotents() const {
  std::vector<ElementId> out;
  for (ElementId a = 0; a < static_cast<ElementId>(size_); ++a) {
    if (is_idempotent(a)) out.push_back(a);
  }
  return out;
}

std::vector<ElementId> FiniteMonoid::right_ideal_of(ElementId a) const {
  std::vector<uint8_t> in(size_, 0);
  for (ElementId s = 0; s < static_cast<ElementId>(size_); ++s) {
    in[product(a, s)] = 1;
  }
  std::vector<ElementId> out;
  for (size_t i = 0; i < size_; ++i) {
    if (in[i]) out.push_back(static_cast<ElementId>(i));
  }
  return out;
}

std::vector<ElementId> FiniteMonoid::left_ideal_of(ElementId a) const {
  std::vector<uint8_t> in(size_, 0);
  for (ElementId s = 0; s < static_cast<ElementId>(size_); ++s) {
    in[product(s, a)] = 1;
  }
  std::vector<ElementId> out;
  for (size_t i = 0; i < size_; ++i) {
    if (in[i]) out.push_back(static_cast<ElementId>(i));
  }
  return out;
}

std::vector<ElementId> FiniteMonoid::two_sided_ideal_of(ElementId a) const {
  std::vector<uint8_t> in(size_, 0);
  for (ElementId s = 0; s < static_cast<ElementId>(size_); ++s) {
    ElementId sa = product(s, a);
    for (ElementId t = 0; t < static_cast<ElementId>(size_); ++t) {
      in[product(sa, t)] = 1;
    }
  }
  std::vector<ElementId> out;
  for (size_t i = 0; i < size_; ++i) {
    if (in[i]) out.push_back(static_cast<ElementId>(i));
  }
  return out;
}

bool natural_order(const FiniteMonoid& m, ElementId e, ElementId f) {
  if (!m.is_idempotent(e) || !m.is_idempotent(f)) {
    throw std::invalid_argument("natural_order: arguments must be idempotent");
  }
  return m.product(e, f) == e && m.product(f, e) == e;
}

RegularityResult regularity(const FiniteMonoid& m) {
  auto n = static_cast<ElementId>(m.size());
  for (ElementId a = 0; a < n; ++a) {
    bool ok = false;
    for (ElementId b = 0; b < n && !ok; ++b) {
      ok = m.product(m.product(a, b), a) == a;
    }
    if (!ok) return {false, a};
  }
  return {true, std::nullopt};
}

bool is_regular(const FiniteMonoid& m) { return regularity(m).regular; }

bool is_inverse(const FiniteMonoid& m) {
  if (!is_regular(m)) return false;
  GreenStructure g = green(m);
  std::vector<int> r_count(g.R.num_classes(), 0);
  std::vector<int> l_count(g.L.num_classes(), 0);
  for (ElementId e : m.idempotents()) {
    ++r_count[g.R.class_of(e)];
    ++l_count[g.L.class_of(e)];
  }
  for (int c : r_count) {
    if (c > 1) return false;
  }
  for (int c : l_count) {
    if (c > 1) return false;
  }
  return true;
}

namespace {

// Partition elements by a set-valued key.
Partition partition_by_sets(const std::vector<std::vector<ElementId>>& sets) {
  std::vector<int32_t> cls(sets.size());
  std::vector<const std::vector<ElementId>*> seen;
  for (size_t a = 0; a < sets.size(); ++a) {
    int32_t found = -1;
    for (size_t k = 0; k < seen.size(); ++k) {
      if (*seen[k] == sets[a]) {
        found = static_cast<int32_t>(k);
        break;
      }
    }
    if (found == -1) {
      found = static_cast<int32_t>(seen.size());
      seen.push_back(&sets[a]);
    }
    cls[a] = found;
  }
  return Partition(std::move(cls));
}

}  // namespace

GreenStructure green(const FiniteMonoid& m) {
  auto n = static_cast<ElementId>(m.size());
  std::vector<std::vector<ElementId>> rsets(n), lsets(n), jsets(n);
  for (ElementId a = 0; a < n; ++a) {
    rsets[a] = m.right_ideal_of(a);
    lsets[a] = m.left_ideal_of(a);
    jsets[a] = m.two_sided_ideal_of(a);
  }
  GreenStructure g;
  g.n = m.size();
  g.R = partition_by_sets(rsets);
  g.L = partition_by_sets(lsets);
  g.H = g.R.meet(g.L);
  g.D = g.R.join(g.L);
  g.J = partition_by_sets(jsets);
  g.leq_j.assign(m.size() * m.size(), 0);
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      g.leq_j[static_cast<size_t>(a) * m.size() + b] =
          std::includes(jsets[b].begin(), jsets[b].end(), jsets[a].begin(),
                        jsets[a].end())
              ? 1
              : 0;
    }
  }
  return g;
}

TildeRelations tilde_relations(const FiniteMonoid& m,
                               std::vector<ElementId> E) {
  for (ElementId e : E) {
    if (!m.is_idempotent(e)) {
      throw std::invalid_argument("tilde_relations: E contains non-idempotent " +
                                  m.label(e));
    }
  }
  auto n = static_cast<ElementId>(m.size());
  // signature: which e in E fix the element on the given side
  std::vector<std::vector<ElementId>> rsig(n), lsig(n);
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId e : E) {
      if (m.product(e, a) == a) rsig[a].push_back(e);
      if (m.product(a, e) == a) lsig[a].push_back(e);
    }
  }
  TildeRelations t;
  t.E = std::move(E);
  t.R = partition_by_sets(rsig);
  t.L = partition_by_sets(lsig);
  t.H = t.R.meet(t.L);
  return t;
}

bool is_subsemigroup(const FiniteMonoid& m, const std::vector<ElementId>& T) {
  std::vector<uint8_t> in(m.size(), 0);
  for (ElementId t : T) in[t] = 1;
  for (ElementId a : T) {
    for (ElementId b : T) {
      if (!in[m.product(a, b)]) return false;
    }
  }
  return !T.empty();
}

std::optional<ElementId> subsemigroup_identity(
    const FiniteMonoid& m, const std::vector<ElementId>& T) {
  for (ElementId e : T) {
    bool ok = true;
    for (ElementId t : T) {
      if (m.product(e, t) != t || m.product(t, e) != t) {
        ok = false;
        break;
      }
    }
    if (ok) return e;
  }
  return std::nullopt;
}

UnitaryStatus unitary_status(const FiniteMonoid& m,
                             const std::vector<ElementId>& T) {
  if (!is_subsemigroup(m, T)) {
    throw std::invalid_argument("unitary_status: T is not a subsemigroup");
  }
  auto e = subsemigroup_identity(m, T);
  if (!e) {
    throw std::invalid_argument("unitary_status: T has no identity");
  }
  std::vector<uint8_t> in(m.size(), 0);
  for (ElementId t : T) in[t] = 1;

  UnitaryStatus st;
  st.subsemigroup_identity = *e;
  st.left_unitary = st.weakly_left_unitary = true;
  st.right_unitary = st.weakly_right_unitary = true;
  for (ElementId a : T) {
    for (ElementId b = 0; b < static_cast<ElementId>(m.size()); ++b) {
      if (in[m.product(a, b)]) {
        if (st.left_unitary && !in[b]) {
          st.left_unitary = false;
          st.left_witness = UnitaryWitness{a, b};
        }
        if (st.weakly_left_unitary && !in[m.product(*e, b)]) {
          st.weakly_left_unitary = false;
          st.weak_left_witness = UnitaryWitness{a, b};
        }
      }
      if (in[m.product(b, a)]) {
        if (st.right_unitary && !in[b]) {
          st.right_unitary = false;
          st.right_witness = UnitaryWitness{a, b};
        }
        if (st.weakly_right_unitary && !in[m.product(b, *e)]) {
          st.weakly_right_unitary = false;
          st.weak_right_witness = UnitaryWitness{a, b};
        }
      }
    }
  }
  return st;
}

}  // namespace coact
