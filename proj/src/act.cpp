#include "coact/act.hpp"

#include <sstream>
#include <stdexcept>

namespace coact {

FiniteRightAct::FiniteRightAct(MonoidPtr m, size_t size,
                               std::vector<ElementId> table,
                               std::vector<std::string> labels)
    : monoid_(std::move(m)), size_(size), table_(std::move(table)),
      labels_(std::move(labels)) {
  if (!monoid_) throw std::invalid_argument("FiniteRightAct: null monoid");
  if (table_.size() != size_ * monoid_->size()) {
    throw std::invalid_argument("FiniteRightAct: table has wrong shape");
  }
  for (ElementId x : table_) {
    if (x < 0 || static_cast<size_t>(x) >= size_) {
      throw std::invalid_argument("FiniteRightAct: table entry out of range");
    }
  }
  if (labels_.empty()) {
    labels_.reserve(size_);
    for (size_t i = 0; i < size_; ++i) {
      labels_.push_back("a" + std::to_string(i));
    }
  }
  if (labels_.size() != size_) {
    throw std::invalid_argument("FiniteRightAct: wrong number of labels");
  }
}

std::optional<ElementId> FiniteRightAct::element_of(
    const std::string& label) const {
  for (size_t i = 0; i < size_; ++i) {
    if (labels_[i] == label) return static_cast<ElementId>(i);
  }
  return std::nullopt;
}

std::optional<std::string> FiniteRightAct::validate() const {
  auto n = static_cast<ElementId>(size_);
  auto k = static_cast<ElementId>(monoid_->size());
  for (ElementId a = 0; a < n; ++a) {
    if (act(a, monoid_->identity()) != a) {
      return "act identity law fails at " + label(a);
    }
  }
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId s = 0; s < k; ++s) {
      ElementId as = act(a, s);
      for (ElementId t = 0; t < k; ++t) {
        if (act(a, monoid_->product(s, t)) != act(as, t)) {
          std::ostringstream os;
          os << "act associativity fails at (" << label(a) << ","
             << monoid_->label(s) << "," << monoid_->label(t) << ")";
          return os.str();
        }
      }
    }
  }
  return std::nullopt;
}

FiniteRightAct monoid_act(MonoidPtr m) {
  if (!m) throw std::invalid_argument("monoid_act: null monoid");
  size_t n = m->size();
  std::vector<ElementId> table(n * n);
  for (size_t a = 0; a < n; ++a) {
    for (size_t s = 0; s < n; ++s) {
      table[a * n + s] = m->product(static_cast<ElementId>(a),
                                    static_cast<ElementId>(s));
    }
  }
  std::vector<std::string> labels = m->labels();
  return FiniteRightAct(std::move(m), n, std::move(table), std::move(labels));
}

FiniteRightAct monoid_act(FiniteMonoid m) {
  return monoid_act(std::make_shared<const FiniteMonoid>(std::move(m)));
}

FreeAct free_act(MonoidPtr m, std::vector<std::string> basis) {
  if (!m) throw std::invalid_argument("free_act: null monoid");
  if (basis.empty()) throw std::invalid_argument("free_act: empty basis");
  size_t n = m->size();
  FreeActView v{basis.size(), n};
  size_t sz = basis.size() * n;
  std::vector<ElementId> table(sz * n);
  std::vector<std::string> labels(sz);
  for (size_t x = 0; x < basis.size(); ++x) {
    for (size_t s = 0; s < n; ++s) {
      ElementId a = v.elem(static_cast<int>(x), static_cast<ElementId>(s));
      for (size_t t = 0; t < n; ++t) {
        table[static_cast<size_t>(a) * n + t] = v.elem(
            static_cast<int>(x),
            m->product(static_cast<ElementId>(s), static_cast<ElementId>(t)));
      }
      labels[a] = s == static_cast<size_t>(m->identity())
                      ? basis[x]
                      : basis[x] + "*" + m->label(static_cast<ElementId>(s));
    }
  }
  FiniteRightAct act(std::move(m), sz, std::move(table), std::move(labels));
  return FreeAct{std::move(act), v, std::move(basis)};
}

FreeAct free_act(FiniteMonoid m, std::vector<std::string> basis) {
  return free_act(std::make_shared<const FiniteMonoid>(std::move(m)),
                  std::move(basis));
}

}  // namespace coact
