#include "coact/computable-monoid.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace coact {

const std::vector<CElem>& ComputableMonoid::cached_ball(int radius) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto it = ball_cache_.find(radius);
  if (it != ball_cache_.end()) return it->second;

  // BFS over right multiplication by generators
  CElemSet seen;
  std::deque<CElem> frontier;
  CElem id = one();
  seen.insert(id);
  frontier.push_back(id);
  std::vector<CElem> gens = generators();
  for (int level = 0; level < radius; ++level) {
    std::deque<CElem> next;
    for (const CElem& u : frontier) {
      for (const CElem& g : gens) {
        CElem v = multiply(u, g);
        if (seen.insert(v).second) next.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  std::vector<CElem> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return ball_cache_.emplace(radius, std::move(out)).first->second;
}

const CElemSet& ComputableMonoid::cached_ball_set(int radius) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = ball_set_cache_.find(radius);
    if (it != ball_set_cache_.end()) return it->second;
  }
  const std::vector<CElem>& b = ball(radius);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto it = ball_set_cache_.find(radius);
  if (it != ball_set_cache_.end()) return it->second;
  CElemSet set(b.begin(), b.end());
  return ball_set_cache_.emplace(radius, std::move(set)).first->second;
}

std::vector<CElem> ComputableMonoid::ball(int radius) const {
  return cached_ball(radius);
}

bool ComputableMonoid::in_ball(const CElem& a, int radius) const {
  if (auto n = norm(a)) return *n <= radius;
  return cached_ball_set(radius).count(a) > 0;
}

std::vector<CElem> ComputableMonoid::left_divide(const CElem& c,
                                                 const CElem& u,
                                                 int radius) const {
  std::vector<CElem> out;
  for (const CElem& t : ball(radius)) {
    if (multiply(c, t) == u) out.push_back(t);
  }
  return out;
}

// ---- free monoid ----

FreeMonoid::FreeMonoid(std::vector<std::string> alphabet)
    : alphabet_(std::move(alphabet)) {
  if (alphabet_.empty()) {
    throw std::invalid_argument("FreeMonoid: empty alphabet");
  }
  for (const std::string& s : alphabet_) {
    if (s.empty() || s == "1") {
      throw std::invalid_argument("FreeMonoid: bad letter '" + s + "'");
    }
  }
}

CElem FreeMonoid::multiply(const CElem& a, const CElem& b) const {
  CElem out = a;
  out.v.insert(out.v.end(), b.v.begin(), b.v.end());
  return out;
}

std::vector<CElem> FreeMonoid::generators() const {
  std::vector<CElem> out;
  for (size_t i = 0; i < alphabet_.size(); ++i) {
    out.push_back(CElem{{static_cast<int64_t>(i)}});
  }
  return out;
}

bool FreeMonoid::valid(const CElem& a) const {
  for (int64_t x : a.v) {
    if (x < 0 || static_cast<size_t>(x) >= alphabet_.size()) return false;
  }
  return true;
}

std::string FreeMonoid::render(const CElem& a) const {
  if (a.v.empty()) return "1";
  std::string out;
  for (int64_t x : a.v) out += alphabet_[static_cast<size_t>(x)];
  return out;
}

std::string FreeMonoid::name() const {
  std::string out = "free{";
  for (size_t i = 0; i < alphabet_.size(); ++i) {
    if (i) out += ",";
    out += alphabet_[i];
  }
  return out + "}";
}

std::vector<CElem> FreeMonoid::ball(int radius) const {
  // all words of length <= radius, in length-lex order
  std::vector<CElem> out{one()};
  size_t begin = 0;
  for (int len = 1; len <= radius; ++len) {
    size_t end = out.size();
    for (size_t k = begin; k < end; ++k) {
      for (size_t i = 0; i < alphabet_.size(); ++i) {
        CElem w = out[k];
        w.v.push_back(static_cast<int64_t>(i));
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

bool FreeMonoid::in_ball(const CElem& a, int radius) const {
  return a.v.size() <= static_cast<size_t>(radius);
}

std::optional<int64_t> FreeMonoid::norm(const CElem& a) const {
  return static_cast<int64_t>(a.v.size());
}

std::vector<CElem> FreeMonoid::left_divide(const CElem& c, const CElem& u,
                                           int radius) const {
  (void)radius;
  if (c.v.size() > u.v.size()) return {};
  if (!std::equal(c.v.begin(), c.v.end(), u.v.begin())) return {};
  CElem t;
  t.v.assign(u.v.begin() + static_cast<int64_t>(c.v.size()), u.v.end());
  return {t};
}

std::optional<CElem> FreeMonoid::word(const std::string& text) const {
  if (text == "1") return one();
  CElem out;
  size_t pos = 0;
  while (pos < text.size()) {
    int64_t best = -1;
    size_t best_len = 0;
    for (size_t i = 0; i < alphabet_.size(); ++i) {
      const std::string& let = alphabet_[i];
      if (let.size() > best_len && text.compare(pos, let.size(), let) == 0) {
        best = static_cast<int64_t>(i);
        best_len = let.size();
      }
    }
    if (best == -1) return std::nullopt;
    out.v.push_back(best);
    pos += best_len;
  }
  return out;
}

CElem FreeMonoid::letter(size_t index) const {
  return CElem{{static_cast<int64_t>(index)}};
}

// ---- Bruck-Reilly ----

BruckReillyMonoid::BruckReillyMonoid(FiniteMonoid base, BREndo theta,
                                     bool render_as_pairs)
    : base_(std::move(base)),
      theta_(std::move(theta)),
      render_as_pairs_(render_as_pairs) {
  if (theta_.domain_size() != base_.size()) {
    throw std::invalid_argument("BruckReillyMonoid: endomorphism mismatch");
  }
}

CElem BruckReillyMonoid::multiply(const CElem& x, const CElem& y) const {
  int64_t a = x.v[0], b = x.v[2], c = y.v[0], d = y.v[2];
  auto g = static_cast<ElementId>(x.v[1]);
  auto h = static_cast<ElementId>(y.v[1]);
  int64_t t = std::max(b, c);
  ElementId mid = base_.product(theta_.power(g, t - b), theta_.power(h, t - c));
  return triple(a - b + t, mid, d - c + t);
}

CElem BruckReillyMonoid::one() const { return triple(0, base_.identity(), 0); }

std::vector<CElem> BruckReillyMonoid::generators() const {
  std::vector<CElem> out{triple(1, base_.identity(), 0),
                         triple(0, base_.identity(), 1)};
  for (ElementId m = 0; m < static_cast<ElementId>(base_.size()); ++m) {
    if (m != base_.identity()) out.push_back(triple(0, m, 0));
  }
  return out;
}

bool BruckReillyMonoid::valid(const CElem& a) const {
  return a.v.size() == 3 && a.v[0] >= 0 && a.v[2] >= 0 && a.v[1] >= 0 &&
         static_cast<size_t>(a.v[1]) < base_.size();
}

std::string BruckReillyMonoid::render(const CElem& a) const {
  std::ostringstream os;
  if (render_as_pairs_) {
    os << "(" << a.v[0] << "," << a.v[2] << ")";
  } else {
    os << "(" << a.v[0] << "," << base_.label(static_cast<ElementId>(a.v[1]))
       << "," << a.v[2] << ")";
  }
  return os.str();
}

std::string BruckReillyMonoid::name() const {
  return render_as_pairs_ ? "bicyclic" : "BR";
}

std::optional<int64_t> BruckReillyMonoid::norm(const CElem& a) const {
  int64_t extra = a.v[1] == base_.identity() ? 0 : 1;
  return a.v[0] + a.v[2] + extra;
}

bool BruckReillyMonoid::in_ball(const CElem& a, int radius) const {
  return *norm(a) <= radius;
}

std::vector<CElem> BruckReillyMonoid::ball(int radius) const {
  std::vector<CElem> out;
  for (int64_t a = 0; a <= radius; ++a) {
    for (int64_t b = 0; a + b <= radius; ++b) {
      for (ElementId m = 0; m < static_cast<ElementId>(base_.size()); ++m) {
        int64_t extra = m == base_.identity() ? 0 : 1;
        if (a + b + extra <= radius) out.push_back(triple(a, m, b));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ComputablePtr bicyclic_monoid() {
  FiniteMonoid t = trivial_monoid();
  BREndo id = BREndo::identity(t);
  return std::make_shared<BruckReillyMonoid>(std::move(t), std::move(id),
                                             /*render_as_pairs=*/true);
}

// ---- extended Bruck-Reilly with adjoined identity ----

ExtendedBruckReillyMonoid::ExtendedBruckReillyMonoid(FiniteMonoid base_group,
                                                     BREndo theta)
    : base_(std::move(base_group)), theta_(std::move(theta)) {
  if (theta_.domain_size() != base_.size()) {
    throw std::invalid_argument("EBR: endomorphism mismatch");
  }
  if (!is_regular(base_) || base_.idempotents().size() != 1) {
    throw std::invalid_argument("EBR: base must be a group");
  }
}

CElem ExtendedBruckReillyMonoid::multiply(const CElem& x,
                                          const CElem& y) const {
  if (x.v.empty()) return y;
  if (y.v.empty()) return x;
  int64_t a = x.v[0], b = x.v[2], c = y.v[0], d = y.v[2];
  auto g = static_cast<ElementId>(x.v[1]);
  auto h = static_cast<ElementId>(y.v[1]);
  int64_t t = std::max(b, c);
  ElementId mid = base_.product(theta_.power(g, t - b), theta_.power(h, t - c));
  return triple(a - b + t, mid, d - c + t);
}

std::vector<CElem> ExtendedBruckReillyMonoid::generators() const {
  // not finitely generated; these only seed spot checks
  std::vector<CElem> out{triple(1, base_.identity(), 0),
                         triple(0, base_.identity(), 1),
                         triple(-1, base_.identity(), -1)};
  for (ElementId m = 0; m < static_cast<ElementId>(base_.size()); ++m) {
    if (m != base_.identity()) out.push_back(triple(0, m, 0));
  }
  return out;
}

bool ExtendedBruckReillyMonoid::valid(const CElem& a) const {
  if (a.v.empty()) return true;
  return a.v.size() == 3 && a.v[1] >= 0 &&
         static_cast<size_t>(a.v[1]) < base_.size();
}

std::string ExtendedBruckReillyMonoid::render(const CElem& a) const {
  if (a.v.empty()) return "1!";
  std::ostringstream os;
  os << "(" << a.v[0] << "," << base_.label(static_cast<ElementId>(a.v[1]))
     << "," << a.v[2] << ")";
  return os.str();
}

std::string ExtendedBruckReillyMonoid::name() const { return "EBR^1"; }

std::optional<int64_t> ExtendedBruckReillyMonoid::norm(const CElem& a) const {
  if (a.v.empty()) return 0;
  return std::max(std::abs(a.v[0]), std::abs(a.v[2]));
}

bool ExtendedBruckReillyMonoid::in_ball(const CElem& a, int radius) const {
  return *norm(a) <= radius;
}

std::vector<CElem> ExtendedBruckReillyMonoid::ball(int radius) const {
  std::vector<CElem> out{one()};
  for (int64_t a = -radius; a <= radius; ++a) {
    for (int64_t b = -radius; b <= radius; ++b) {
      for (ElementId m = 0; m < static_cast<ElementId>(base_.size()); ++m) {
        out.push_back(triple(a, m, b));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- product ----

ProductComputableMonoid::ProductComputableMonoid(ComputablePtr left,
                                                 ComputablePtr right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (!left_ || !right_) {
    throw std::invalid_argument("ProductComputableMonoid: null factor");
  }
}

CElem ProductComputableMonoid::pair(const CElem& x, const CElem& y) const {
  CElem out;
  out.v.reserve(1 + x.v.size() + y.v.size());
  out.v.push_back(static_cast<int64_t>(x.v.size()));
  out.v.insert(out.v.end(), x.v.begin(), x.v.end());
  out.v.insert(out.v.end(), y.v.begin(), y.v.end());
  return out;
}

std::pair<CElem, CElem> ProductComputableMonoid::split(const CElem& e) const {
  if (e.v.empty()) throw std::invalid_argument("product element malformed");
  auto n1 = static_cast<size_t>(e.v[0]);
  if (1 + n1 > e.v.size()) {
    throw std::invalid_argument("product element malformed");
  }
  CElem x, y;
  x.v.assign(e.v.begin() + 1, e.v.begin() + 1 + static_cast<int64_t>(n1));
  y.v.assign(e.v.begin() + 1 + static_cast<int64_t>(n1), e.v.end());
  return {x, y};
}

CElem ProductComputableMonoid::multiply(const CElem& a, const CElem& b) const {
  auto [ax, ay] = split(a);
  auto [bx, by] = split(b);
  return pair(left_->multiply(ax, bx), right_->multiply(ay, by));
}

CElem ProductComputableMonoid::one() const {
  return pair(left_->one(), right_->one());
}

std::optional<CElem> ProductComputableMonoid::zero() const {
  auto zl = left_->zero();
  auto zr = right_->zero();
  if (zl && zr) return pair(*zl, *zr);
  return std::nullopt;
}

std::vector<CElem> ProductComputableMonoid::generators() const {
  std::vector<CElem> out;
  for (const CElem& g : left_->generators()) out.push_back(pair(g, right_->one()));
  for (const CElem& g : right_->generators()) out.push_back(pair(left_->one(), g));
  return out;
}

bool ProductComputableMonoid::valid(const CElem& a) const {
  if (a.v.empty() || a.v[0] < 0 ||
      static_cast<size_t>(a.v[0]) + 1 > a.v.size()) {
    return false;
  }
  auto [x, y] = split(a);
  return left_->valid(x) && right_->valid(y);
}

std::string ProductComputableMonoid::render(const CElem& a) const {
  auto [x, y] = split(a);
  return "(" + left_->render(x) + "," + right_->render(y) + ")";
}

std::string ProductComputableMonoid::name() const {
  return left_->name() + "x" + right_->name();
}

std::optional<int64_t> ProductComputableMonoid::norm(const CElem& a) const {
  auto [x, y] = split(a);
  auto nx = left_->norm(x);
  auto ny = right_->norm(y);
  if (!nx || !ny) return std::nullopt;
  return *nx + *ny;
}

bool ProductComputableMonoid::in_ball(const CElem& a, int radius) const {
  if (auto n = norm(a)) return *n <= radius;
  return ComputableMonoid::in_ball(a, radius);
}

std::vector<CElem> ProductComputableMonoid::ball(int radius) const {
  // products of <= r generators are exactly the pairs with norm sum <= r;
  // enumerate by left level
  std::vector<CElem> out;
  for (int i = 0; i <= radius; ++i) {
    std::vector<CElem> lv = left_->ball(i);
    if (i > 0) {
      // keep only norm-i elements: remove ball(i-1)
      CElemSet prev;
      for (const CElem& e : left_->ball(i - 1)) prev.insert(e);
      std::vector<CElem> shell;
      for (CElem& e : lv) {
        if (!prev.count(e)) shell.push_back(std::move(e));
      }
      lv = std::move(shell);
    }
    std::vector<CElem> rv = right_->ball(radius - i);
    for (const CElem& x : lv) {
      for (const CElem& y : rv) out.push_back(pair(x, y));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CElem> ProductComputableMonoid::left_divide(const CElem& c,
                                                        const CElem& u,
                                                        int radius) const {
  auto [cx, cy] = split(c);
  auto [ux, uy] = split(u);
  std::vector<CElem> tx = left_->left_divide(cx, ux, radius);
  if (tx.empty()) return {};
  std::vector<CElem> ty = right_->left_divide(cy, uy, radius);
  std::vector<CElem> out;
  for (const CElem& x : tx) {
    for (const CElem& y : ty) out.push_back(pair(x, y));
  }
  return out;
}

bool ProductComputableMonoid::division_exact() const {
  return left_->division_exact() && right_->division_exact();
}

// ---- adjunction wrappers ----

AdjoinOneComputable::AdjoinOneComputable(ComputablePtr base)
    : base_(std::move(base)) {
  if (!base_) throw std::invalid_argument("AdjoinOneComputable: null base");
}

CElem AdjoinOneComputable::wrap(const CElem& e) const {
  CElem out;
  out.v.reserve(e.v.size() + 1);
  out.v.push_back(0);
  out.v.insert(out.v.end(), e.v.begin(), e.v.end());
  return out;
}

std::optional<CElem> AdjoinOneComputable::unwrap(const CElem& e) const {
  if (e.v.empty() || e.v[0] != 0) return std::nullopt;
  CElem out;
  out.v.assign(e.v.begin() + 1, e.v.end());
  return out;
}

CElem AdjoinOneComputable::multiply(const CElem& a, const CElem& b) const {
  if (a == one()) return b;
  if (b == one()) return a;
  return wrap(base_->multiply(*unwrap(a), *unwrap(b)));
}

std::optional<CElem> AdjoinOneComputable::zero() const {
  if (auto z = base_->zero()) return wrap(*z);
  return std::nullopt;
}

std::vector<CElem> AdjoinOneComputable::generators() const {
  std::vector<CElem> out;
  out.push_back(wrap(base_->one()));
  for (const CElem& g : base_->generators()) out.push_back(wrap(g));
  return out;
}

bool AdjoinOneComputable::valid(const CElem& a) const {
  if (a == one()) return true;
  auto u = unwrap(a);
  return u && base_->valid(*u);
}

std::string AdjoinOneComputable::render(const CElem& a) const {
  if (a == one()) return "1!";
  return base_->render(*unwrap(a));
}

std::string AdjoinOneComputable::name() const { return base_->name() + "^1"; }

std::vector<CElem> AdjoinOneComputable::ball(int radius) const {
  std::vector<CElem> out{one()};
  for (const CElem& e : base_->ball(radius)) out.push_back(wrap(e));
  std::sort(out.begin(), out.end());
  return out;
}

bool AdjoinOneComputable::in_ball(const CElem& a, int radius) const {
  if (a == one()) return true;
  return base_->in_ball(*unwrap(a), radius);
}

AdjoinZeroComputable::AdjoinZeroComputable(ComputablePtr base)
    : base_(std::move(base)) {
  if (!base_) throw std::invalid_argument("AdjoinZeroComputable: null base");
}

CElem AdjoinZeroComputable::wrap(const CElem& e) const {
  CElem out;
  out.v.reserve(e.v.size() + 1);
  out.v.push_back(0);
  out.v.insert(out.v.end(), e.v.begin(), e.v.end());
  return out;
}

std::optional<CElem> AdjoinZeroComputable::unwrap(const CElem& e) const {
  if (e.v.empty() || e.v[0] != 0) return std::nullopt;
  CElem out;
  out.v.assign(e.v.begin() + 1, e.v.end());
  return out;
}

CElem AdjoinZeroComputable::multiply(const CElem& a, const CElem& b) const {
  if (a == *zero() || b == *zero()) return *zero();
  return wrap(base_->multiply(*unwrap(a), *unwrap(b)));
}

CElem AdjoinZeroComputable::one() const { return wrap(base_->one()); }

std::vector<CElem> AdjoinZeroComputable::generators() const {
  std::vector<CElem> out;
  out.push_back(*zero());
  for (const CElem& g : base_->generators()) out.push_back(wrap(g));
  return out;
}

bool AdjoinZeroComputable::valid(const CElem& a) const {
  if (a == *zero()) return true;
  auto u = unwrap(a);
  return u && base_->valid(*u);
}

std::string AdjoinZeroComputable::render(const CElem& a) const {
  if (a == *zero()) return "0!";
  return base_->render(*unwrap(a));
}

std::string AdjoinZeroComputable::name() const { return base_->name() + "^0"; }

std::vector<CElem> AdjoinZeroComputable::ball(int radius) const {
  std::vector<CElem> out{*zero()};
  for (const CElem& e : base_->ball(radius)) out.push_back(wrap(e));
  std::sort(out.begin(), out.end());
  return out;
}

bool AdjoinZeroComputable::in_ball(const CElem& a, int radius) const {
  if (a == *zero()) return true;
  return base_->in_ball(*unwrap(a), radius);
}

// ---- law checks and bounded unitarity ----

std::optional<std::string> spot_check_monoid(const ComputableMonoid& m,
                                             int radius) {
  std::vector<CElem> b = m.ball(radius);
  CElem id = m.one();
  for (const CElem& x : b) {
    if (m.multiply(id, x) != x || m.multiply(x, id) != x) {
      return "identity law fails at " + m.render(x);
    }
    if (!m.valid(x)) return "invalid element in ball: " + m.render(x);
  }
  if (auto z = m.zero()) {
    for (const CElem& x : b) {
      if (m.multiply(*z, x) != *z || m.multiply(x, *z) != *z) {
        return "zero law fails at " + m.render(x);
      }
    }
  }
  for (const CElem& x : b) {
    for (const CElem& y : b) {
      CElem xy = m.multiply(x, y);
      for (const CElem& z : b) {
        if (m.multiply(xy, z) != m.multiply(x, m.multiply(y, z))) {
          return "associativity fails at (" + m.render(x) + "," + m.render(y) +
                 "," + m.render(z) + ")";
        }
      }
    }
  }
  return std::nullopt;
}

BoundedUnitaryStatus bounded_unitary_status(const ComputableMonoid& m,
                                            const std::vector<CElem>& T,
                                            int radius) {
  CElemSet tset(T.begin(), T.end());
  for (const CElem& a : T) {
    for (const CElem& b : T) {
      if (!tset.count(m.multiply(a, b))) {
        throw std::invalid_argument("bounded_unitary_status: T not closed");
      }
    }
  }
  const CElem* e = nullptr;
  for (const CElem& cand : T) {
    bool ok = true;
    for (const CElem& t : T) {
      if (m.multiply(cand, t) != t || m.multiply(t, cand) != t) {
        ok = false;
        break;
      }
    }
    if (ok) {
      e = &cand;
      break;
    }
  }
  if (!e) {
    throw std::invalid_argument("bounded_unitary_status: T has no identity");
  }

  BoundedUnitaryStatus st;
  st.left_unitary = Verdict3::kTrue;
  st.weakly_left_unitary = Verdict3::kTrue;
  for (const CElem& a : T) {
    for (const CElem& b : m.ball(radius)) {
      if (!tset.count(m.multiply(a, b))) continue;
      if (st.left_unitary == Verdict3::kTrue && !tset.count(b)) {
        st.left_unitary = Verdict3::kFalse;
        st.left_witness = {a, b};
      }
      if (st.weakly_left_unitary == Verdict3::kTrue &&
          !tset.count(m.multiply(*e, b))) {
        st.weakly_left_unitary = Verdict3::kFalse;
        st.weak_witness = {a, b};
      }
    }
  }
  // a found witness is exact; an all-clear is only as good as the bound
  st.bound_relative = st.left_unitary == Verdict3::kTrue ||
                      st.weakly_left_unitary == Verdict3::kTrue;
  return st;
}

}  // namespace coact
