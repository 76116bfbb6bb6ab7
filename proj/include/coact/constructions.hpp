#ifndef COACT_CONSTRUCTIONS_HPP_
#define COACT_CONSTRUCTIONS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "coact/finite-monoid.hpp"

namespace coact {

// ---- catalog builtins ----

FiniteMonoid trivial_monoid();
/// Cyclic group of order n, labels 1, g, g2, ...
FiniteMonoid cyclic_group(int n);
/// Two-element semilattice {1, e}, e*e = e.
FiniteMonoid u2_monoid();

// ---- adjunctions and products ----

/// M with a brand new identity adjoined (always, even if M already has
/// one).  The new identity is the last element, labelled "1!".
FiniteMonoid adjoin_identity(const FiniteMonoid& m);
/// M with a new absorbing zero adjoined as the last element, labelled "0!".
FiniteMonoid adjoin_zero(const FiniteMonoid& m);

/// Componentwise product; element (s, t) has index s*|T| + t.
FiniteMonoid direct_product(const FiniteMonoid& s, const FiniteMonoid& t);

struct ProductView {
  size_t left_size, right_size;
  ElementId pair(ElementId s, ElementId t) const {
    return static_cast<ElementId>(s * right_size + t);
  }
  ElementId left_of(ElementId p) const {
    return static_cast<ElementId>(p / right_size);
  }
  ElementId right_of(ElementId p) const {
    return static_cast<ElementId>(p % right_size);
  }
};

ProductView product_view(const FiniteMonoid& s, const FiniteMonoid& t);

// ---- Rees matrix and Brandt monoids ----

/// Lambda x I sandwich matrix with entries from M, or kZero markers when
/// the with-zero construction is wanted.
class SandwichMatrix {
 public:
  static constexpr ElementId kZero = -1;

  SandwichMatrix(size_t rows /* |Lambda| */, size_t cols /* |I| */,
                 std::vector<ElementId> entries);
  static SandwichMatrix all_identity(const FiniteMonoid& m, size_t rows,
                                     size_t cols);
  /// Identity pattern: 1_M on the diagonal, zero off it.
  static SandwichMatrix identity_pattern(const FiniteMonoid& m, size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  ElementId entry(size_t lambda, size_t i) const {
    return entries_[lambda * cols_ + i];
  }
  bool has_zero_entry() const;
  /// Informational flag for the completely-0-simple convention.
  bool every_row_and_column_hits_m() const;

 private:
  size_t rows_, cols_;
  std::vector<ElementId> entries_;
};

/// Layout of a Rees matrix monoid M(M; I, Lambda; P)(^0)(^1): triples
/// (i, a, lambda) first in lexicographic order, then the zero (when
/// present), then the adjoined identity (when requested).
struct ReesView {
  size_t i_size, m_size, lambda_size;
  bool with_zero, with_one;
  ElementId triple(int i, ElementId a, int lambda) const {
    return static_cast<ElementId>((static_cast<size_t>(i) * m_size + a) *
                                      lambda_size +
                                  lambda);
  }
  size_t num_triples() const { return i_size * m_size * lambda_size; }
  bool is_triple(ElementId x) const {
    return static_cast<size_t>(x) < num_triples();
  }
  int row_of(ElementId x) const {
    return static_cast<int>(x / (m_size * lambda_size));
  }
  ElementId mid_of(ElementId x) const {
    return static_cast<ElementId>((x / lambda_size) % m_size);
  }
  int col_of(ElementId x) const { return static_cast<int>(x % lambda_size); }
  std::optional<ElementId> zero() const {
    if (!with_zero) return std::nullopt;
    return static_cast<ElementId>(num_triples());
  }
  std::optional<ElementId> one() const {
    if (!with_one) return std::nullopt;
    return static_cast<ElementId>(num_triples() + (with_zero ? 1 : 0));
  }
  size_t size() const {
    return num_triples() + (with_zero ? 1 : 0) + (with_one ? 1 : 0);
  }
};

struct ReesMonoid {
  FiniteMonoid monoid;
  ReesView view;
};

/// Rees matrix semigroup over M with sandwich matrix P; optionally with a
/// zero and an adjoined identity.  Throws if P has a zero entry but
/// with_zero is unset.
ReesMonoid rees_matrix(const FiniteMonoid& m, const SandwichMatrix& p,
                       bool with_zero, bool adjoin_one);

struct BrandtMonoid {
  FiniteMonoid monoid;
  ReesView view;  // i_size == lambda_size, with_zero always true
};

/// Brandt semigroup B(M; I) (with zero), optionally with an identity
/// adjoined.  (i,a,j)(k,b,l) = (i,ab,l) when j == k, else 0.
BrandtMonoid brandt(const FiniteMonoid& m, size_t index_size, bool adjoin_one);

// ---- endomorphisms for Bruck-Reilly extensions ----

/// A verified endomorphism of a finite monoid, with memoized powers.
class BREndo {
 public:
  BREndo(const FiniteMonoid& m, std::vector<ElementId> image);
  static BREndo identity(const FiniteMonoid& m);
  /// The endomorphism collapsing everything to 1_M.
  static BREndo trivial(const FiniteMonoid& m);

  size_t domain_size() const { return image_.size(); }
  ElementId apply(ElementId a) const { return image_[a]; }
  /// theta^k(a), k >= 0 (theta^0 = identity map).
  ElementId power(ElementId a, int64_t k) const;
  const std::vector<ElementId>& image_map() const { return image_; }

 private:
  std::vector<ElementId> image_;
  // powers_[k] is theta^(k+1); extended on demand (powers cycle eventually
  // but memoization keeps it simple)
  mutable std::vector<std::vector<ElementId>> powers_;
};

}  // namespace coact

#endif  // COACT_CONSTRUCTIONS_HPP_
