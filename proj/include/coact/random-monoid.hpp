#ifndef COACT_RANDOM_MONOID_HPP_
#define COACT_RANDOM_MONOID_HPP_

#include <random>
#include <vector>

#include "coact/congruence.hpp"
#include "coact/finite-monoid.hpp"

namespace coact {

struct RandomMonoidOptions {
  size_t max_size = 8;
  int max_points = 3;  // degree of the transformation representation
  int max_gens = 2;
  bool allow_catalog = true;  // mix in small construction-based monoids
};

/// A random finite monoid within the size bound: either the closure of a
/// few random transformations of a small set (with the identity map
/// adjoined) or a small catalog construction.  Deterministic given the rng
/// state; never fails.
FiniteMonoid random_monoid(std::mt19937& rng, const RandomMonoidOptions& opt);

/// A random regular monoid from a fixed catalog (Brandt monoids over small
/// cyclic groups, semilattices, groups and their products).
FiniteMonoid random_regular_monoid(std::mt19937& rng);

/// Closure of a random subset under multiplication (a subsemigroup,
/// possibly all of S).
std::vector<ElementId> random_subsemigroup(std::mt19937& rng,
                                           const FiniteMonoid& m);

PairSet random_pairs(std::mt19937& rng, size_t carrier, int max_pairs);

}  // namespace coact

#endif  // COACT_RANDOM_MONOID_HPP_
