#ifndef COACT_HARNESS_HPP_
#define COACT_HARNESS_HPP_

#include <optional>
#include <vector>

#include "coact/computable-monoid.hpp"
#include "coact/congruence.hpp"
#include "coact/constructions.hpp"
#include "coact/report.hpp"

namespace coact {

// Each operation runs one of the explicit constructions on a concrete
// instance and verifies the produced generating sets against brute-force
// oracles.  All existential choices are resolved by least-index search so
// reports are reproducible.

/// Assembles the annihilator generating set Y for ann(a rho) on a finite
/// regular monoid, rho = <X> (X symmetrized internally), and verifies
/// <Y> = ann(a rho).
ConstructionReport thm32_annihilator_gens(const FiniteMonoid& s,
                                          const PairSet& x, ElementId a);

/// Rees matrix monoid over a finite group: right-ideal classification,
/// the four-case ideal quotient table, and rho-closure structure for
/// seeded random finitely generated congruences.
ConstructionReport prop34_rees_check(const FiniteMonoid& g, size_t i_size,
                                     size_t lambda_size,
                                     const SandwichMatrix& p, uint32_t seed);

/// For S = B(G;I)^1 and rho = <((i,g,i), 1)>: verifies
/// (0S)rho = {0} u union of rows j != i and 1 not in (0S)rho, with a
/// replayable witness (j,h,j) rho 0 per row.
ConstructionReport prop35_brandt_zero_closure(const FiniteMonoid& g,
                                              size_t i_size, int i,
                                              ElementId gelem);

/// EBR(G,theta)^1 within ball(radius): principal right ideal patterns and
/// the ideal-quotient formula (eS,a) = (q+i-p,e,q+i-p)S.
ConstructionReport prop36_ebr_check(const FiniteMonoid& g, const BREndo& theta,
                                    int radius, uint32_t seed);

/// Verifies theta_map is a retraction of S onto T: a morphism with image T
/// restricting to the identity on T.
ConstructionReport retraction_checks(const FiniteMonoid& s,
                                     const std::vector<ElementId>& t,
                                     const std::vector<ElementId>& theta_map);
/// The two built-in retractions.
ConstructionReport ideal_retraction_check(const FiniteMonoid& s,
                                          const std::vector<ElementId>& ideal);
ConstructionReport product_projection_check(const FiniteMonoid& s,
                                            const FiniteMonoid& t);

/// Identity adjunction transfer: nu = rho n (M x M) equals <K>_M and
/// ann(a rho) = < ann(a nu) u {(1_M, 1!)} > on M^1.  Pairs are element ids
/// of adjoin_identity(m) (base elements keep their ids).
ConstructionReport prop43_identity_transfer(const FiniteMonoid& m,
                                            const PairSet& h_on_m1,
                                            ElementId a);

/// Monoid J-class transfer: H' generates ann(a rho) in J and Y'J equals
/// (a rho)J n (b rho)J, for rho = <H>_J.
ConstructionReport thm48_jclass_constructions(const FiniteMonoid& s,
                                              ElementId j_member,
                                              const PairSet& h, ElementId a,
                                              ElementId b);

/// Checks conditions (a)-(d) for a monoid subsemigroup M inside S relative
/// to an idempotent set E, then runs the K' and T transported-generating-set
/// constructions for seeded sample congruences on M.
ConstructionReport prop49_conditions_check(const FiniteMonoid& s,
                                           const std::vector<ElementId>& m_sub,
                                           const std::vector<ElementId>& e_set,
                                           uint32_t seed);

// ---- Brandt monoid congruence machinery ----

struct BrandtQuad {
  int i;
  ElementId b;
  int k;
  ElementId c;
};

/// Normal form of a congruence generating set on B(M;I)^1: one of
///   case 1: <(1,0)> (the universal congruence),
///   case 2: 1 is a singleton class; generators H_A u H_B,
///   case 3: {1} != 1rho != S; generators {((i,1_M,i),1)} u H_A u H_B with
///           all A-quadruples supported on the single index i.
struct BrandtCongruenceData {
  int case_tag = 0;
  std::vector<BrandtQuad> quads;                      // A
  std::vector<std::pair<int, ElementId>> zero_pairs;  // B
  int bullet = 0;
  std::optional<int> unit_index;  // case 3 only

  std::vector<int> support() const;  // indices in A (first and third)
  /// The generating pairs H this data denotes, as element ids of bm.
  PairSet generators(const BrandtMonoid& bm) const;
};

/// Classifies <K> into exactly one of the three cases and emits the
/// normalized generating set; verifies <H> = <K> and, in case 3, the
/// support conditions.  On success *out (when given) receives the data.
ConstructionReport lemma51_normalize(const BrandtMonoid& bm, const PairSet& k,
                                     BrandtCongruenceData* out = nullptr);

/// The Brandt-to-free-act transfer: (p,d,*) rho_A (q,e,*) iff
/// x_p d tau_A x_q e, verified for all (p,d), (q,e) over supp A.
ConstructionReport lemma52_transfer(const FiniteMonoid& m, size_t i_size,
                                    const std::vector<BrandtQuad>& a);

/// Annihilator generators on B(M;I)^1: verifies <R1 u R2 u R3> =
/// ann((u,a,v) rho) for the congruence denoted by data.
ConstructionReport lemma53_annihilator(const FiniteMonoid& m, size_t i_size,
                                       const BrandtCongruenceData& data, int u,
                                       ElementId a, int v);

/// Intersection generators on B(M;I)^1: the subact generated by
/// U u V u {0 rho} equals ((u,a,v) rho)S n ((w,b,z) rho)S.
ConstructionReport lemma54_intersection(const FiniteMonoid& m, size_t i_size,
                                        const BrandtCongruenceData& data,
                                        int u, ElementId a, int v, int w,
                                        ElementId b, int z);

/// Zero adjunction transfer on M^0: rho^0 = rho u {(0,0)},
/// ann(a rho^0) = ann(a rho) u {(0,0)}, and intersection generators drop
/// from M^0 to M.
ConstructionReport cor56_zero_transfer(const FiniteMonoid& m,
                                       const PairSet& rho, ElementId a,
                                       ElementId b);

/// The two-generator congruence on the product of free monoids on
/// {a,x,b}: verifies the closed-form classes of (a x^n, b), the
/// nu-singletons (x^n, 1), the witness chain relating (x^n b, 1) to
/// (x^n a, 1), and that no sampled generating set with short components
/// relates them (bound-relative).
ConstructionReport ex62_product_check(int n_max, int radius, int sample_count,
                                      uint32_t seed);

/// Act presentation transfer between S x T-acts and S-acts, both
/// directions, for the act presented by basis_size generators and pairs h
/// over the free S x T-act (ids of free_act(direct_product(s,t), ...)).
ConstructionReport prop65_act_transfer(const FiniteMonoid& s,
                                       const FiniteMonoid& t,
                                       size_t basis_size, const PairSet& h);

/// Randomized implication checks: weakly left unitary implies SRCEP;
/// monoid J-classes are weakly left and right unitary; regular monoids
/// have ~R_E = R and ~L_E = L for E = E(S).  Any failure is a bug.
ConstructionReport fuzz_implications(int samples, size_t max_size,
                                     uint32_t seed);

}  // namespace coact

#endif  // COACT_HARNESS_HPP_
