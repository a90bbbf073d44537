#ifndef GAMMALIB_GRADING_HPP
#define GAMMALIB_GRADING_HPP

#include <functional>
#include <optional>
#include <utility>

#include "gammalib/gamma_ring.hpp"
#include "gammalib/semigroup.hpp"

namespace gammalib {

/// A candidate grading of a flat ring: one subgroup of the carrier per
/// degree.  Whether it is a grading is decided by check_internal_grading.
struct InternalGrading {
  GammaRing ring;
  FiniteSemigroup type;                 // must be commutative
  std::vector<AbelianGroup> assignment; // indexed by type element index
};

/// A verified graded ring: the carrier is the internal direct sum of the
/// degree components and products respect degrees.  Immutable; construct
/// via grade() or from_components().
class GradedGammaRing {
 public:
  /// Per-degree product rule: takes degree indices g, h, an element of
  /// component g (in that component's own coordinates), a gamma element and
  /// an element of component h; returns an element of component g*h.
  using DegreeProductFn = std::function<Element(
      std::size_t, std::size_t, const Element&, const Element&,
      const Element&)>;

  /// External construction: the flat carrier is the direct sum of the given
  /// component groups and the flat product is the bi-additive extension of
  /// the per-degree rule, so degree containment holds by construction.
  /// Whether the result satisfies the ring laws is still check_axioms'
  /// business.
  static GradedGammaRing from_components(FiniteSemigroup type,
                                         AbelianGroup gamma,
                                         std::vector<AbelianGroup> components,
                                         DegreeProductFn rule);

  const FiniteSemigroup& type() const;
  const GammaRing& ring() const;
  std::size_t degrees() const;
  /// Component of degree g as a subgroup of the flat carrier.
  const AbelianGroup& component(std::size_t g) const;
  /// Degrees whose component is nontrivial.
  std::vector<std::size_t> support() const;

  /// Homogeneous parts of x: (degree, part) pairs with nonzero part, in
  /// ascending degree order.  Parts are flat carrier elements summing to x.
  std::vector<std::pair<std::size_t, Element>> decompose(
      const Element& x) const;
  /// The degree-g part of x (possibly zero).
  Element component_part(const Element& x, std::size_t g) const;

 private:
  GradedGammaRing() = default;
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  friend GradedGammaRing grade(const InternalGrading&, const EnumBudget&);
};

/// Verifies that the assignment is an internal direct sum of subgroups with
/// degree-respecting products.  Conditions, in order: "direct sum" (sizes
/// multiply to |R| and every sum of parts is distinct), "containment"
/// (R_g Gamma R_h <= R_{g*h}, lexicographically first witness).
Verdict check_internal_grading(const InternalGrading& candidate,
                               const EnumBudget& budget = EnumBudget());

/// Builds the verified graded ring; throws InvalidStructureError with the
/// embedded verdict if check_internal_grading fails.
GradedGammaRing grade(const InternalGrading& candidate,
                      const EnumBudget& budget = EnumBudget());

/// The flat ring plus assignment, for round trips.
InternalGrading as_internal(const GradedGammaRing& g);

/// Pushes the grading along a surjective semigroup map: the new component
/// at h is the sum of the old components over the fiber of h.
GradedGammaRing regrade_epimorphism(const GradedGammaRing& g,
                                    const SemigroupMap& phi,
                                    const EnumBudget& budget = EnumBudget());

/// Restricts to the subring carried by the components over a subsemigroup
/// (given as degree indices; the subset must be product-closed).
GradedGammaRing restrict_subsemigroup(const GradedGammaRing& g,
                                      const std::vector<std::size_t>& members,
                                      const EnumBudget& budget = EnumBudget());

/// Coarsens a group-type grading along G -> G/N.  Only defined when the
/// type is a commutative group.
GradedGammaRing coarsen_by_quotient(const GradedGammaRing& g,
                                    const std::vector<std::size_t>& subgroup,
                                    const EnumBudget& budget = EnumBudget());

/// The same components over the opposite ring (valid since the type is
/// commutative).
GradedGammaRing opposite_graded(const GradedGammaRing& g,
                                const EnumBudget& budget = EnumBudget());

/// Componentwise grading on the direct product; all factors must share the
/// type and the gamma group.
GradedGammaRing product_graded(const std::vector<GradedGammaRing>& factors,
                               const EnumBudget& budget = EnumBudget());

/// Facts about the identity component R_e (requires the type to have an
/// identity): closure of R_e under the product, the flat ring's unities,
/// and whether each unity lies in R_e.
struct IdentityComponentReport {
  std::size_t identity_degree;
  Verdict subring;  // R_e Gamma R_e <= R_e
  std::vector<Unity> unities;
  std::vector<bool> unity_in_identity;  // aligned with unities
};
IdentityComponentReport identity_component_facts(
    const GradedGammaRing& g, const EnumBudget& budget = EnumBudget());

/// For a homogeneous invertible r of degree d over a group-type grading,
/// computes the inverse and asserts it is homogeneous of degree d^{-1}.
struct HomogeneousInverseReport {
  Element inverse;
  std::size_t degree;          // degree of r
  std::size_t inverse_degree;  // degree of r^{-1}
};
HomogeneousInverseReport homogeneous_inverse_check(const GradedGammaRing& g,
                                                   const Unity& unity,
                                                   const Element& r);

/// Checks whether a two-sided ideal is graded (every homogeneous part of
/// every member stays in the ideal) and, on pass, builds the induced
/// grading on R/I with components (R_g + I)/I.
struct GradedIdealReport {
  Verdict verdict;
  std::optional<GradedGammaRing> quotient;
};
GradedIdealReport graded_ideal_check(const GradedGammaRing& g,
                                     const Ideal& ideal,
                                     const EnumBudget& budget = EnumBudget());

/// R_g Gamma R_h, as the additive subgroup generated by the products, must
/// equal R_{g*h} for every pair.  failing_pair is the first violation in
/// degree-index order.
struct StrongReport {
  bool strongly_graded = false;
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
};
StrongReport strongly_graded_check(const GradedGammaRing& g,
                                   const EnumBudget& budget = EnumBudget());

/// Unit criterion for group-type gradings with unity: R is strongly graded
/// iff 1 lies in the subgroup generated by R_g Gamma R_{g^{-1}} for every g.
struct UnitCriterionReport {
  bool holds = false;
  std::optional<std::size_t> failing_degree;
};
UnitCriterionReport strong_criterion_unit(const GradedGammaRing& g,
                                          const Unity& unity,
                                          const EnumBudget& budget =
                                              EnumBudget());

/// Classifies a group-type grading with unity as a crossed product: every
/// degree must carry a homogeneous unit.  Also records the support facts
/// and the strongly-graded verdict, and asserts the forced implications
/// (crossed implies strongly graded; strongly graded implies full support
/// when the ring is not the zero ring).
struct CrossedProductReport {
  bool crossed = false;
  std::vector<std::size_t> unit_support;  // degrees with a homogeneous unit
  std::vector<std::size_t> support;       // degrees with nontrivial component
  StrongReport strong;
};
CrossedProductReport crossed_product_check(const GradedGammaRing& g,
                                           const Unity& unity,
                                           const EnumBudget& budget =
                                               EnumBudget());

/// For a degree-preserving epimorphism f (value table over the source
/// carrier order) out of a strongly graded ring that maps unity to unity,
/// verifies the map and asserts the target is strongly graded.
struct PushforwardReport {
  Verdict map_check;
  StrongReport target;
};
PushforwardReport strong_pushforward_check(const GradedGammaRing& src,
                                           const GradedGammaRing& dst,
                                           const std::vector<Element>& f,
                                           const Unity& src_unity,
                                           const EnumBudget& budget =
                                               EnumBudget());

/// The semigroup ring base[G]: one copy of the base carrier per degree,
/// products convolved through G.  Returns the canonically graded ring.
GradedGammaRing semigroup_gamma_ring(const GammaRing& base,
                                     const FiniteSemigroup& G);

/// Truncated polynomial ring over base: coefficients for degrees 0..cap,
/// products beyond the cap vanish.  Graded by the clamped-addition monoid
/// on {0..cap}.
GradedGammaRing polynomial_gamma_ring(const GammaRing& base, std::size_t cap);

}  // namespace gammalib

#endif
