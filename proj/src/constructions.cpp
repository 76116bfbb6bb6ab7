#include "coact/constructions.hpp"

#include <sstream>
#include <stdexcept>

namespace coact {

FiniteMonoid trivial_monoid() {
  return FiniteMonoid(1, {0}, 0, std::nullopt, {"1"});
}

FiniteMonoid cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_group: n must be positive");
  std::vector<ElementId> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[static_cast<size_t>(a) * n + b] = (a + b) % n;
    }
  }
  std::vector<std::string> labels;
  labels.push_back("1");
  if (n > 1) labels.push_back("g");
  for (int k = 2; k < n; ++k) labels.push_back("g" + std::to_string(k));
  return FiniteMonoid(n, std::move(table), 0, std::nullopt, std::move(labels));
}

FiniteMonoid u2_monoid() {
  // 1*1=1, 1*e=e, e*1=e, e*e=e
  return FiniteMonoid(2, {0, 1, 1, 1}, 0, std::nullopt, {"1", "e"});
}

FiniteMonoid adjoin_identity(const FiniteMonoid& m) {
  size_t n = m.size();
  size_t sz = n + 1;
  ElementId one = static_cast<ElementId>(n);
  std::vector<ElementId> table(sz * sz);
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      table[a * sz + b] = m.product(static_cast<ElementId>(a),
                                    static_cast<ElementId>(b));
    }
  }
  for (size_t a = 0; a < sz; ++a) {
    table[a * sz + one] = static_cast<ElementId>(a);
    table[static_cast<size_t>(one) * sz + a] = static_cast<ElementId>(a);
  }
  std::vector<std::string> labels(m.labels());
  labels.push_back("1!");
  return FiniteMonoid(sz, std::move(table), one, m.zero(), std::move(labels));
}

FiniteMonoid adjoin_zero(const FiniteMonoid& m) {
  size_t n = m.size();
  size_t sz = n + 1;
  ElementId zero = static_cast<ElementId>(n);
  std::vector<ElementId> table(sz * sz, zero);
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      table[a * sz + b] = m.product(static_cast<ElementId>(a),
                                    static_cast<ElementId>(b));
    }
  }
  std::vector<std::string> labels(m.labels());
  labels.push_back("0!");
  return FiniteMonoid(sz, std::move(table), m.identity(), zero,
                      std::move(labels));
}

ProductView product_view(const FiniteMonoid& s, const FiniteMonoid& t) {
  return ProductView{s.size(), t.size()};
}

FiniteMonoid direct_product(const FiniteMonoid& s, const FiniteMonoid& t) {
  ProductView v = product_view(s, t);
  size_t sz = s.size() * t.size();
  std::vector<ElementId> table(sz * sz);
  for (size_t a = 0; a < sz; ++a) {
    ElementId as = v.left_of(static_cast<ElementId>(a));
    ElementId at = v.right_of(static_cast<ElementId>(a));
    for (size_t b = 0; b < sz; ++b) {
      ElementId bs = v.left_of(static_cast<ElementId>(b));
      ElementId bt = v.right_of(static_cast<ElementId>(b));
      table[a * sz + b] = v.pair(s.product(as, bs), t.product(at, bt));
    }
  }
  std::vector<std::string> labels(sz);
  for (size_t a = 0; a < sz; ++a) {
    labels[a] = "(" + s.label(v.left_of(static_cast<ElementId>(a))) + "," +
                t.label(v.right_of(static_cast<ElementId>(a))) + ")";
  }
  std::optional<ElementId> zero;
  if (s.zero() && t.zero()) zero = v.pair(*s.zero(), *t.zero());
  return FiniteMonoid(sz, std::move(table),
                      v.pair(s.identity(), t.identity()), zero,
                      std::move(labels));
}

SandwichMatrix::SandwichMatrix(size_t rows, size_t cols,
                               std::vector<ElementId> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw std::invalid_argument("SandwichMatrix: empty index set");
  }
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("SandwichMatrix: wrong entry count");
  }
}

SandwichMatrix SandwichMatrix::all_identity(const FiniteMonoid& m, size_t rows,
                                            size_t cols) {
  return SandwichMatrix(rows, cols,
                        std::vector<ElementId>(rows * cols, m.identity()));
}

SandwichMatrix SandwichMatrix::identity_pattern(const FiniteMonoid& m,
                                                size_t n) {
  std::vector<ElementId> e(n * n, kZero);
  for (size_t i = 0; i < n; ++i) e[i * n + i] = m.identity();
  return SandwichMatrix(n, n, std::move(e));
}

bool SandwichMatrix::has_zero_entry() const {
  for (ElementId x : entries_) {
    if (x == kZero) return true;
  }
  return false;
}

bool SandwichMatrix::every_row_and_column_hits_m() const {
  for (size_t r = 0; r < rows_; ++r) {
    bool hit = false;
    for (size_t c = 0; c < cols_ && !hit; ++c) hit = entry(r, c) != kZero;
    if (!hit) return false;
  }
  for (size_t c = 0; c < cols_; ++c) {
    bool hit = false;
    for (size_t r = 0; r < rows_ && !hit; ++r) hit = entry(r, c) != kZero;
    if (!hit) return false;
  }
  return true;
}

namespace {

std::string triple_label(const FiniteMonoid& m, int i, ElementId a, int lam) {
  std::ostringstream os;
  os << "(" << (i + 1) << "," << m.label(a) << "," << (lam + 1) << ")";
  return os.str();
}

}  // namespace

ReesMonoid rees_matrix(const FiniteMonoid& m, const SandwichMatrix& p,
                       bool with_zero, bool adjoin_one) {
  if (p.has_zero_entry() && !with_zero) {
    throw std::invalid_argument(
        "rees_matrix: sandwich matrix has a zero entry but with_zero is unset");
  }
  ReesView v{p.cols(), m.size(), p.rows(), with_zero, adjoin_one};
  size_t sz = v.size();
  ElementId zero = v.zero().value_or(-1);
  ElementId one = v.one().value_or(-1);
  std::vector<ElementId> table(sz * sz, zero);

  auto nt = static_cast<ElementId>(v.num_triples());
  for (ElementId x = 0; x < nt; ++x) {
    int i = v.row_of(x);
    ElementId a = v.mid_of(x);
    int lam = v.col_of(x);
    for (ElementId y = 0; y < nt; ++y) {
      int j = v.row_of(y);
      ElementId b = v.mid_of(y);
      int mu = v.col_of(y);
      ElementId pe = p.entry(lam, j);
      if (pe == SandwichMatrix::kZero) {
        table[static_cast<size_t>(x) * sz + y] = zero;  // requires with_zero
      } else {
        table[static_cast<size_t>(x) * sz + y] =
            v.triple(i, m.product(m.product(a, pe), b), mu);
      }
    }
  }
  if (with_zero) {
    for (size_t x = 0; x < sz; ++x) {
      table[x * sz + zero] = zero;
      table[static_cast<size_t>(zero) * sz + x] = zero;
    }
  }
  if (adjoin_one) {
    for (size_t x = 0; x < sz; ++x) {
      table[x * sz + one] = static_cast<ElementId>(x);
      table[static_cast<size_t>(one) * sz + x] = static_cast<ElementId>(x);
    }
  }

  std::vector<std::string> labels(sz);
  for (ElementId x = 0; x < nt; ++x) {
    labels[x] = triple_label(m, v.row_of(x), v.mid_of(x), v.col_of(x));
  }
  if (with_zero) labels[zero] = "0";
  if (adjoin_one) labels[one] = "1";

  std::optional<ElementId> zopt;
  if (with_zero) zopt = zero;
  ElementId id = adjoin_one ? one : -1;
  if (!adjoin_one) {
    // a Rees matrix semigroup is only a monoid in degenerate cases; insist
    // on an identity so the result is a genuine FiniteMonoid
    for (ElementId x = 0; x < static_cast<ElementId>(sz); ++x) {
      bool ok = true;
      for (ElementId y = 0; y < static_cast<ElementId>(sz) && ok; ++y) {
        ok = table[static_cast<size_t>(x) * sz + y] == y &&
             table[static_cast<size_t>(y) * sz + x] == y;
      }
      if (ok) {
        id = x;
        break;
      }
    }
    if (id == -1) {
      throw std::invalid_argument(
          "rees_matrix: result has no identity; pass adjoin_one");
    }
  }
  return ReesMonoid{
      FiniteMonoid(sz, std::move(table), id, zopt, std::move(labels)), v};
}

BrandtMonoid brandt(const FiniteMonoid& m, size_t index_size,
                    bool adjoin_one) {
  if (index_size == 0) throw std::invalid_argument("brandt: empty index set");
  ReesMonoid r = rees_matrix(m, SandwichMatrix::identity_pattern(m, index_size),
                             /*with_zero=*/true, adjoin_one);
  return BrandtMonoid{std::move(r.monoid), r.view};
}

BREndo::BREndo(const FiniteMonoid& m, std::vector<ElementId> image)
    : image_(std::move(image)) {
  if (image_.size() != m.size()) {
    throw std::invalid_argument("BREndo: image map has wrong size");
  }
  if (image_[m.identity()] != m.identity()) {
    throw std::invalid_argument("BREndo: identity not fixed");
  }
  for (ElementId x = 0; x < static_cast<ElementId>(m.size()); ++x) {
    for (ElementId y = 0; y < static_cast<ElementId>(m.size()); ++y) {
      if (image_[m.product(x, y)] != m.product(image_[x], image_[y])) {
        throw std::invalid_argument("BREndo: not an endomorphism at (" +
                                    m.label(x) + "," + m.label(y) + ")");
      }
    }
  }
}

BREndo BREndo::identity(const FiniteMonoid& m) {
  std::vector<ElementId> img(m.size());
  for (size_t i = 0; i < m.size(); ++i) img[i] = static_cast<ElementId>(i);
  return BREndo(m, std::move(img));
}

BREndo BREndo::trivial(const FiniteMonoid& m) {
  return BREndo(m, std::vector<ElementId>(m.size(), m.identity()));
}

ElementId BREndo::power(ElementId a, int64_t k) const {
  if (k < 0) throw std::invalid_argument("BREndo::power: negative exponent");
  if (k == 0) return a;
  if (powers_.empty()) powers_.push_back(image_);
  while (powers_.size() < static_cast<size_t>(k)) {
    const std::vector<ElementId>& prev = powers_.back();
    std::vector<ElementId> next(image_.size());
    for (size_t i = 0; i < image_.size(); ++i) next[i] = image_[prev[i]];
    powers_.push_back(std::move(next));
  }
  return powers_[static_cast<size_t>(k) - 1][a];
}

}  // namespace coact
