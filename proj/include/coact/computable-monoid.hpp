#ifndef COACT_COMPUTABLE_MONOID_HPP_
#define COACT_COMPUTABLE_MONOID_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "coact/constructions.hpp"
#include "coact/finite-monoid.hpp"

namespace coact {

/// Canonical element of a lazily enumerated monoid.  Equality is equality
/// of the canonical representation; each construction defines its own
/// encoding (words for free monoids, integer triples for Bruck-Reilly).
struct CElem {
  std::vector<int64_t> v;

  bool operator==(const CElem& o) const { return v == o.v; }
  bool operator!=(const CElem& o) const { return v != o.v; }
  bool operator<(const CElem& o) const {
    if (v.size() != o.v.size()) return v.size() < o.v.size();
    return v < o.v;
  }
};

struct CElemHash {
  size_t operator()(const CElem& e) const {
    uint64_t h = 1469598103934665603ull;
    for (int64_t x : e.v) {
      h ^= static_cast<uint64_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h ^ (e.v.size() << 7));
  }
};

using CElemSet = std::unordered_set<CElem, CElemHash>;

/// A monoid with a total multiplication rule on canonical elements and a
/// radius-bounded enumeration ball(r).  For finitely generated
/// constructions ball(r) is the set of products of at most r generators;
/// the extended Bruck-Reilly extension (not finitely generated) enumerates
/// by index bound instead.  Immutable and safe to share; the ball cache is
/// internally synchronized.
class ComputableMonoid {
 public:
  virtual ~ComputableMonoid() = default;

  virtual CElem multiply(const CElem& a, const CElem& b) const = 0;
  virtual CElem one() const = 0;
  virtual std::optional<CElem> zero() const { return std::nullopt; }
  virtual std::vector<CElem> generators() const = 0;
  virtual bool valid(const CElem& a) const = 0;
  virtual std::string render(const CElem& a) const = 0;
  virtual std::string name() const = 0;

  /// Elements within radius; sorted for deterministic reports.
  virtual std::vector<CElem> ball(int radius) const;
  virtual bool in_ball(const CElem& a, int radius) const;
  /// Least r with a in ball(r), when cheaply computable.
  virtual std::optional<int64_t> norm(const CElem& a) const {
    (void)a;
    return std::nullopt;
  }

  /// All t with c * t == u.  When division_exact() the result is complete
  /// over the whole monoid; otherwise the search is confined to
  /// ball(radius).
  virtual std::vector<CElem> left_divide(const CElem& c, const CElem& u,
                                         int radius) const;
  virtual bool division_exact() const { return false; }

 protected:
  const std::vector<CElem>& cached_ball(int radius) const;
  const CElemSet& cached_ball_set(int radius) const;

 private:
  mutable std::mutex cache_mutex_;
  mutable std::map<int, std::vector<CElem>> ball_cache_;
  mutable std::map<int, CElemSet> ball_set_cache_;
};

using ComputablePtr = std::shared_ptr<const ComputableMonoid>;

// ---- constructions ----

class FreeMonoid : public ComputableMonoid {
 public:
  explicit FreeMonoid(std::vector<std::string> alphabet);

  CElem multiply(const CElem& a, const CElem& b) const override;
  CElem one() const override { return {}; }
  std::vector<CElem> generators() const override;
  bool valid(const CElem& a) const override;
  std::string render(const CElem& a) const override;
  std::string name() const override;
  std::vector<CElem> ball(int radius) const override;
  bool in_ball(const CElem& a, int radius) const override;
  std::optional<int64_t> norm(const CElem& a) const override;
  std::vector<CElem> left_divide(const CElem& c, const CElem& u,
                                 int radius) const override;
  bool division_exact() const override { return true; }

  /// The word for a string over the alphabet (greedy longest-match);
  /// nullopt when the string does not scan.
  std::optional<CElem> word(const std::string& text) const;
  CElem letter(size_t index) const;
  size_t alphabet_size() const { return alphabet_.size(); }

 private:
  std::vector<std::string> alphabet_;
};

/// BR(M, theta) over a finite monoid: elements (a, g, b) with a, b >= 0 and
/// (a,g,b)(c,h,d) = (a-b+t, (g theta^(t-b))(h theta^(t-c)), d-c+t) for
/// t = max(b, c).
class BruckReillyMonoid : public ComputableMonoid {
 public:
  BruckReillyMonoid(FiniteMonoid base, BREndo theta,
                    bool render_as_pairs = false);

  CElem multiply(const CElem& a, const CElem& b) const override;
  CElem one() const override;
  std::vector<CElem> generators() const override;
  bool valid(const CElem& a) const override;
  std::string render(const CElem& a) const override;
  std::string name() const override;
  std::optional<int64_t> norm(const CElem& a) const override;
  bool in_ball(const CElem& a, int radius) const override;
  std::vector<CElem> ball(int radius) const override;

  const FiniteMonoid& base() const { return base_; }
  static CElem triple(int64_t a, ElementId g, int64_t b) {
    return CElem{{a, g, b}};
  }

 private:
  FiniteMonoid base_;
  BREndo theta_;
  bool render_as_pairs_;
};

/// The bicyclic monoid as BR over the trivial monoid, rendered as pairs.
ComputablePtr bicyclic_monoid();

/// EBR(G, theta)^1 over a finite group: triples (a, g, b) with a, b in Z
/// under the Bruck-Reilly rule, plus an adjoined identity (the bare
/// extension is not a monoid).  ball(r) enumerates |a|, |b| <= r.
class ExtendedBruckReillyMonoid : public ComputableMonoid {
 public:
  ExtendedBruckReillyMonoid(FiniteMonoid base_group, BREndo theta);

  CElem multiply(const CElem& a, const CElem& b) const override;
  CElem one() const override { return {}; }  // the adjoined identity
  std::vector<CElem> generators() const override;
  bool valid(const CElem& a) const override;
  std::string render(const CElem& a) const override;
  std::string name() const override;
  std::optional<int64_t> norm(const CElem& a) const override;
  bool in_ball(const CElem& a, int radius) const override;
  std::vector<CElem> ball(int radius) const override;

  const FiniteMonoid& base() const { return base_; }
  static CElem triple(int64_t a, ElementId g, int64_t b) {
    return CElem{{a, g, b}};
  }
  static bool is_triple(const CElem& e) { return e.v.size() == 3; }

 private:
  FiniteMonoid base_;
  BREndo theta_;
};

/// Direct product of two computable monoids; element encodes the length of
/// the first component followed by both component representations.
class ProductComputableMonoid : public ComputableMonoid {
 public:
  ProductComputableMonoid(ComputablePtr left, ComputablePtr right);

  CElem multiply(const CElem& a, const CElem& b) const override;
  CElem one() const override;
  std::optional<CElem> zero() const override;
  std::vector<CElem> generators() const override;
  bool valid(const CElem& a) const override;
  std::string render(const CElem& a) const override;
  std::string name() const override;
  std::optional<int64_t> norm(const CElem& a) const override;
  bool in_ball(const CElem& a, int radius) const override;
  std::vector<CElem> ball(int radius) const override;
  std::vector<CElem> left_divide(const CElem& c, const CElem& u,
                                 int radius) const override;
  bool division_exact() const override;

  CElem pair(const CElem& x, const CElem& y) const;
  std::pair<CElem, CElem> split(const CElem& e) const;

 private:
  ComputablePtr left_, right_;
};

/// M with a fresh identity adjoined (element {1}); base elements are
/// prefixed with a 0 tag.
class AdjoinOneComputable : public ComputableMonoid {
 public:
  explicit AdjoinOneComputable(ComputablePtr base);
  CElem multiply(const CElem& a, const CElem& b) const override;
  CElem one() const override { return CElem{{1}}; }
  std::optional<CElem> zero() const override;
  std::vector<CElem> generators() const override;
  bool valid(const CElem& a) const override;
  std::string render(const CElem& a) const override;
  std::string name() const override;
  std::vector<CElem> ball(int radius) const override;
  bool in_ball(const CElem& a, int radius) const override;

  CElem wrap(const CElem& base_elem) const;
  std::optional<CElem> unwrap(const CElem& e) const;

 private:
  ComputablePtr base_;
};

/// M with a fresh absorbing zero adjoined (element {2}).
class AdjoinZeroComputable : public ComputableMonoid {
 public:
  explicit AdjoinZeroComputable(ComputablePtr base);
  CElem multiply(const CElem& a, const CElem& b) const override;
  CElem one() const override;
  std::optional<CElem> zero() const override { return CElem{{2}}; }
  std::vector<CElem> generators() const override;
  bool valid(const CElem& a) const override;
  std::string render(const CElem& a) const override;
  std::string name() const override;
  std::vector<CElem> ball(int radius) const override;
  bool in_ball(const CElem& a, int radius) const override;

  CElem wrap(const CElem& base_elem) const;
  std::optional<CElem> unwrap(const CElem& e) const;

 private:
  ComputablePtr base_;
};

/// Spot-check of the monoid laws on all triples of ball(radius); returns a
/// description of the first violation or nullopt.
std::optional<std::string> spot_check_monoid(const ComputableMonoid& m,
                                             int radius);

enum class Verdict3 { kTrue, kFalse, kUnknownAtBound };

struct BoundedUnitaryStatus {
  Verdict3 left_unitary = Verdict3::kUnknownAtBound;
  Verdict3 weakly_left_unitary = Verdict3::kUnknownAtBound;
  std::optional<std::pair<CElem, CElem>> left_witness, weak_witness;
  bool bound_relative = true;
};

/// Bound-relative unitarity verdicts for a finite subsemigroup T of a
/// computable monoid.  kTrue means no counterexample with b in
/// ball(radius); kFalse carries an exact witness.
BoundedUnitaryStatus bounded_unitary_status(const ComputableMonoid& m,
                                            const std::vector<CElem>& T,
                                            int radius);

}  // namespace coact

#endif  // COACT_COMPUTABLE_MONOID_HPP_
