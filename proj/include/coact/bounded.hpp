#ifndef COACT_BOUNDED_HPP_
#define COACT_BOUNDED_HPP_

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "coact/computable-monoid.hpp"

namespace coact {

/// A computable monoid acting on itself.
class SelfBoundedAct {
 public:
  explicit SelfBoundedAct(const ComputableMonoid& m) : m_(&m) {}
  const ComputableMonoid& monoid() const { return *m_; }

  CElem act(const CElem& a, const CElem& t) const { return m_->multiply(a, t); }
  std::vector<CElem> divide(const CElem& c, const CElem& u, int radius) const {
    return m_->left_divide(c, u, radius);
  }
  bool division_exact() const { return m_->division_exact(); }
  bool in_ball(const CElem& a, int radius) const {
    return m_->in_ball(a, radius);
  }
  std::string render(const CElem& a) const { return m_->render(a); }

 private:
  const ComputableMonoid* m_;
};

/// Free act over a computable monoid; elements are {basis} ++ scalar.
class FreeBoundedAct {
 public:
  FreeBoundedAct(const ComputableMonoid& m, size_t basis_size)
      : m_(&m), basis_size_(basis_size) {}
  const ComputableMonoid& monoid() const { return *m_; }

  CElem elem(int64_t basis, const CElem& s) const {
    CElem out;
    out.v.reserve(1 + s.v.size());
    out.v.push_back(basis);
    out.v.insert(out.v.end(), s.v.begin(), s.v.end());
    return out;
  }
  int64_t basis_of(const CElem& a) const { return a.v[0]; }
  CElem scalar_of(const CElem& a) const {
    CElem out;
    out.v.assign(a.v.begin() + 1, a.v.end());
    return out;
  }

  CElem act(const CElem& a, const CElem& t) const {
    return elem(basis_of(a), m_->multiply(scalar_of(a), t));
  }
  std::vector<CElem> divide(const CElem& c, const CElem& u, int radius) const {
    if (basis_of(c) != basis_of(u)) return {};
    return m_->left_divide(scalar_of(c), scalar_of(u), radius);
  }
  bool division_exact() const { return m_->division_exact(); }
  bool in_ball(const CElem& a, int radius) const {
    return m_->in_ball(scalar_of(a), radius);
  }
  std::string render(const CElem& a) const {
    return "x" + std::to_string(basis_of(a)) + "*" + m_->render(scalar_of(a));
  }

 private:
  const ComputableMonoid* m_;
  size_t basis_size_;
};

struct BoundedPairSet {
  std::vector<std::pair<CElem, CElem>> pairs;
  void add(CElem a, CElem b) { pairs.emplace_back(std::move(a), std::move(b)); }
  std::vector<std::pair<CElem, CElem>> symmetric() const {
    auto out = pairs;
    out.reserve(2 * pairs.size());
    for (const auto& [a, b] : pairs) out.emplace_back(b, a);
    return out;
  }
};

struct BoundedStep {
  int32_t pair_index;  // into BoundedPairSet::symmetric()
  CElem multiplier;
};

struct BoundedWitness {
  std::vector<BoundedStep> steps;

  template <typename Act>
  bool replay(const Act& act, const BoundedPairSet& origin, const CElem& a,
              const CElem& b) const {
    auto hbar = origin.symmetric();
    CElem current = a;
    for (const BoundedStep& st : steps) {
      if (st.pair_index < 0 ||
          static_cast<size_t>(st.pair_index) >= hbar.size()) {
        return false;
      }
      const auto& [c, d] = hbar[st.pair_index];
      if (act.act(c, st.multiplier) != current) return false;
      current = act.act(d, st.multiplier);
    }
    return current == b;
  }
};

struct SaturatedClass {
  std::vector<CElem> members;  // sorted
  bool complete = false;       // exact class, not merely bound-relative
  bool overflowed = false;     // some rewrite left the ball
};

namespace detail {

template <typename Act>
struct BoundedSearch {
  const Act& act;
  const BoundedPairSet& pairs;
  int radius;
  std::vector<std::pair<CElem, CElem>> hbar;
  std::map<CElem, std::pair<CElem, BoundedStep>> parent;  // child -> (from, step)
  CElemSet members;
  bool overflowed = false;

  BoundedSearch(const Act& a, const BoundedPairSet& p, int r)
      : act(a), pairs(p), radius(r), hbar(p.symmetric()) {}

  // BFS from start; stops early when stop_at is hit (when provided)
  bool run(const CElem& start, const CElem* stop_at) {
    if (!act.in_ball(start, radius)) {
      throw std::invalid_argument("bounded search: start outside ball");
    }
    std::deque<CElem> queue{start};
    members.insert(start);
    while (!queue.empty()) {
      CElem u = queue.front();
      queue.pop_front();
      for (size_t k = 0; k < hbar.size(); ++k) {
        const auto& [c, d] = hbar[k];
        for (const CElem& t : act.divide(c, u, radius)) {
          CElem v = act.act(d, t);
          if (members.count(v)) continue;
          if (!act.in_ball(v, radius)) {
            overflowed = true;
            continue;
          }
          members.insert(v);
          parent.emplace(
              v, std::make_pair(u, BoundedStep{static_cast<int32_t>(k), t}));
          if (stop_at && v == *stop_at) return true;
          queue.push_back(v);
        }
      }
    }
    return stop_at && members.count(*stop_at) > 0;
  }

  BoundedWitness witness(const CElem& start, const CElem& target) const {
    BoundedWitness w;
    CElem cur = target;
    while (cur != start) {
      const auto& [from, step] = parent.at(cur);
      w.steps.push_back(step);
      cur = from;
    }
    std::reverse(w.steps.begin(), w.steps.end());
    return w;
  }
};

}  // namespace detail

/// The H-class of `a` explored within ball(radius).  complete is true only
/// when no rewrite left the ball and the act solves division exactly over
/// the whole monoid; then the member set is the exact class.
template <typename Act>
SaturatedClass saturated_class(const Act& act, const BoundedPairSet& pairs,
                               const CElem& a, int radius) {
  detail::BoundedSearch<Act> search(act, pairs, radius);
  search.run(a, nullptr);
  SaturatedClass out;
  out.members.assign(search.members.begin(), search.members.end());
  std::sort(out.members.begin(), out.members.end());
  out.overflowed = search.overflowed;
  out.complete = !search.overflowed && act.division_exact();
  return out;
}

struct BoundedRelationResult {
  Verdict3 verdict = Verdict3::kUnknownAtBound;
  std::optional<BoundedWitness> witness;
};

/// Relatedness of a and b under the congruence generated by pairs, explored
/// within ball(radius).  kTrue carries a replayable witness; kFalse is
/// only returned when the explored class of a is provably complete.
template <typename Act>
BoundedRelationResult bounded_relation(const Act& act,
                                       const BoundedPairSet& pairs,
                                       const CElem& a, const CElem& b,
                                       int radius) {
  BoundedRelationResult out;
  if (a == b) {
    out.verdict = Verdict3::kTrue;
    out.witness = BoundedWitness{};
    return out;
  }
  detail::BoundedSearch<Act> search(act, pairs, radius);
  bool found = search.run(a, &b);
  if (found) {
    out.verdict = Verdict3::kTrue;
    out.witness = search.witness(a, b);
  } else if (!search.overflowed && act.division_exact()) {
    out.verdict = Verdict3::kFalse;
  }
  return out;
}

}  // namespace coact

#endif  // COACT_BOUNDED_HPP_
