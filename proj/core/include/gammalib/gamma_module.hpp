#ifndef GAMMALIB_GAMMA_MODULE_HPP
#define GAMMALIB_GAMMA_MODULE_HPP

#include "gammalib/filtration.hpp"
#include "gammalib/grading.hpp"

namespace gammalib {

/// A left module over a gamma ring: an abelian group M with an action
/// R x Gamma x M -> M that is additive in each slot and associative with
/// the ring product.  Right modules are handled as left modules over the
/// opposite ring; see right_module().
class GammaModule {
 public:
  using ActionFn = std::function<Element(const Element&, const Element&,
                                         const Element&)>;

  GammaModule(GammaRing ring, AbelianGroup carrier, ActionFn action);

  const GammaRing& ring() const;
  const AbelianGroup& carrier() const;
  /// Validates membership of all three operands and of the result.
  Element act(const Element& r, const Element& g, const Element& m) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// R as a left module over itself; the action is the ring product.
GammaModule regular_module(const GammaRing& r);

/// Wraps a right action M x Gamma x R -> M as a left module over the
/// opposite ring, which carries exactly the right-module laws.
using RightActionFn = std::function<Element(const Element&, const Element&,
                                            const Element&)>;
GammaModule right_module(const GammaRing& r, AbelianGroup carrier,
                         RightActionFn action);

/// Exhaustively checks the four module laws:
///   left distributivity   (r+s) a m = r a m + s a m
///   gamma additivity      r (a+b) m = r a m + r b m
///   right distributivity  r a (m+n) = r a m + r a n
///   associativity         (r a s) b m = r a (s b m)
/// Checked in this order; the witness is the lexicographically first
/// violating tuple of the first violated law.  Action values outside the
/// carrier raise InvalidStructureError.
Verdict check_module_axioms(const GammaModule& m,
                            const EnumBudget& budget = EnumBudget());

/// Checks R Gamma N <= N for a subgroup N of the module carrier (law
/// "action closure").
Verdict check_submodule(const GammaModule& m, const AbelianGroup& candidate,
                        const EnumBudget& budget = EnumBudget());

/// A candidate grading of a module over an already graded ring: one
/// subgroup of the module carrier per degree of the ring's type.
struct InternalModuleGrading {
  GradedGammaRing ring;
  GammaModule module;
  std::vector<AbelianGroup> assignment;  // indexed by type element index
};

/// A verified graded module: the carrier is the internal direct sum of the
/// components and R_g Gamma M_h <= M_{gh}.
class GradedGammaModule {
 public:
  /// Per-degree action rule: takes ring degree g, module degree h, the
  /// degree-g part of the ring element (as a flat ring element), a gamma
  /// element and an element of module component h (in that component's own
  /// coordinates); returns an element of component g*h.
  using DegreeActionFn = std::function<Element(
      std::size_t, std::size_t, const Element&, const Element&,
      const Element&)>;

  /// External construction over the direct sum of the given components;
  /// degree containment holds by construction.
  static GradedGammaModule from_components(GradedGammaRing ring,
                                           std::vector<AbelianGroup> components,
                                           DegreeActionFn rule);

  const GradedGammaRing& graded_ring() const;
  const GammaModule& module() const;
  const FiniteSemigroup& type() const;
  std::size_t degrees() const;
  const AbelianGroup& component(std::size_t g) const;
  std::vector<std::size_t> support() const;

  std::vector<std::pair<std::size_t, Element>> decompose(
      const Element& m) const;
  Element component_part(const Element& m, std::size_t g) const;

 private:
  GradedGammaModule() = default;
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  friend GradedGammaModule grade_module(const InternalModuleGrading&,
                                        const EnumBudget&);
};

/// Conditions, in order: "direct sum" (module carrier is the internal
/// direct sum of the assignment), "containment" (R_g Gamma M_h <= M_{gh}).
/// The module must live over the graded ring's flat ring.
Verdict check_module_grading(const InternalModuleGrading& candidate,
                             const EnumBudget& budget = EnumBudget());

/// Builds the verified graded module; throws InvalidStructureError with the
/// embedded verdict if check_module_grading fails.
GradedGammaModule grade_module(const InternalModuleGrading& candidate,
                               const EnumBudget& budget = EnumBudget());

InternalModuleGrading as_internal(const GradedGammaModule& m);

/// R over itself with the ring's own grading.
GradedGammaModule regular_graded_module(const GradedGammaRing& g);

/// Quotient of a graded module by a submodule K.  The component images
/// (M_g + K)/K always span the quotient; whether they form a direct sum is
/// reported, not assumed.  When they do, the induced graded module is
/// attached.
struct QuotientModuleReport {
  GammaModule quotient;
  std::vector<AbelianGroup> components;  // (M_g + K)/K in the quotient
  bool direct = false;
  std::optional<GradedGammaModule> graded;  // present when direct
};
QuotientModuleReport quotient_module(const GradedGammaModule& m,
                                     const AbelianGroup& submodule,
                                     const EnumBudget& budget = EnumBudget());

/// The largest graded submodule inside K: the subgroup generated by the
/// intersections K and M_g.  Also returns those intersections.
struct GradedSubmodulePart {
  AbelianGroup submodule;
  std::vector<AbelianGroup> parts;  // K intersected with M_g
};
GradedSubmodulePart maximal_graded_submodule(
    const GradedGammaModule& m, const AbelianGroup& submodule,
    const EnumBudget& budget = EnumBudget());

/// An ascending module filtration M^0 <= ... <= M^K = M over a ring
/// filtration, with R^i Gamma M^j <= M^{min(i+j,K)}.
struct FilteredModule {
  Filtration ring_filtration;
  GammaModule module;
  std::vector<AbelianGroup> chain;  // chain[j] is M^j
};

/// Conditions, in order: "monotonicity", "exhaustion", "compatibility".
Verdict check_filtered_module(const FilteredModule& f,
                              const EnumBudget& budget = EnumBudget());

/// Associated graded module over the associated graded ring.  Both chains
/// are first padded to a common length by repeating their tops, so the two
/// clamped-addition types agree.  Coset actions are computed on
/// representatives; independence is verified over every representative
/// pair.
struct GradedPair {
  GradedGammaRing ring;
  GradedGammaModule module;
};
GradedPair gr_module(const FilteredModule& f,
                     const EnumBudget& budget = EnumBudget());

/// Intersects each chain level with a subgroup (as subgroups of `parent`).
std::vector<AbelianGroup> intersect_chain(
    const AbelianGroup& parent, const AbelianGroup& subgroup,
    const std::vector<AbelianGroup>& chain);

/// Powers of an ideal acting on a module: chain[0] = M and chain[k] is the
/// subgroup generated by I Gamma chain[k-1], descending until stable.
AdicChain adic_module_chain(const GammaRing& r, const Ideal& ideal,
                            const GammaModule& m,
                            const EnumBudget& budget = EnumBudget());

/// An (R,S)-bimodule: a left R action and a right S action on one carrier.
struct Bimodule {
  GammaRing left_ring;
  GammaRing right_ring;
  AbelianGroup carrier;
  GammaModule::ActionFn left_action;   // (r, a, m) -> m'
  RightActionFn right_action;          // (m, b, s) -> m'
};

/// Checks the left module laws (law names prefixed "left "), the right
/// module laws (prefixed "right ", via the opposite ring), then the
/// compatibility law (r a m) b s = r a (m b s).
Verdict check_bimodule(const Bimodule& b,
                       const EnumBudget& budget = EnumBudget());

/// Grading conditions for a bimodule over two rings graded by the same
/// type: "direct sum", then "left containment" L_g Gamma M_h <= M_{gh} and
/// "right containment" M_h Gamma S_k <= M_{hk}.  The triple products then
/// land in M_{ghk} automatically.
Verdict check_graded_bimodule(const Bimodule& b, const GradedGammaRing& left,
                              const GradedGammaRing& right,
                              const std::vector<AbelianGroup>& assignment,
                              const EnumBudget& budget = EnumBudget());

/// Checks that the action values r a m_i over all ring elements, gammas and
/// the given generators additively span the carrier (law "generation"; the
/// witness is the first element outside the span).  Bare generators do not
/// count toward the span.
Verdict check_finitely_generated(const GammaModule& m,
                                 const std::vector<Element>& generators,
                                 const EnumBudget& budget = EnumBudget());

/// True when the whole carrier works as a generating set.
bool is_finitely_generated(const GammaModule& m,
                           const EnumBudget& budget = EnumBudget());

/// R_g Gamma M_h, as the subgroup generated by the action values, must
/// equal M_{gh} for every pair.
StrongReport strongly_graded_module_check(
    const GradedGammaModule& m, const EnumBudget& budget = EnumBudget());

}  // namespace gammalib

#endif
