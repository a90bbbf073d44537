#ifndef GAMMALIB_FILTRATION_HPP
#define GAMMALIB_FILTRATION_HPP

#include "gammalib/grading.hpp"

namespace gammalib {

/// An ascending filtration R^0 <= R^1 <= ... <= R^N = R with
/// R^i Gamma R^j <= R^{min(i+j,N)}.
struct Filtration {
  GammaRing ring;
  std::vector<AbelianGroup> chain;  // chain[i] is R^i
};

/// Conditions, in order: "monotonicity" (each level inside the next),
/// "exhaustion" (the top level is the whole carrier), "compatibility"
/// (products land in the clamped-sum level).  A level that is not a
/// subgroup of the carrier raises InvalidStructureError.
Verdict check_filtration(const Filtration& f,
                         const EnumBudget& budget = EnumBudget());

/// The filtration R^k = R_0 + ... + R_k of a ring graded by the
/// clamped-addition monoid on {0..N}.  Products that overflow the cap must
/// vanish (so the associated graded ring recovers the grading); throws
/// PreconditionError otherwise.
Filtration filtration_from_grading(const GradedGammaRing& g,
                                   const EnumBudget& budget = EnumBudget());

/// The quotients chain[k]/chain[k-1] for k = 0..N (chain[-1] read as the
/// trivial subgroup) plus one extra trivial quotient chain[N]/chain[N].
/// These are exactly the components of the associated graded objects, in
/// degree order; elements are the lexicographically least coset
/// representatives.
std::vector<AbelianGroup> chain_level_quotients(
    const std::vector<AbelianGroup>& chain);

/// The associated graded ring of the levels R^k/R^{k-1}, graded by the
/// clamped-addition monoid on {0..N+1}; the extra top slot R/R is trivial
/// so overflow products have somewhere to vanish.  Coset products are
/// computed on representatives; independence from the choice is verified
/// over every representative pair.
GradedGammaRing associated_graded(const Filtration& f,
                                  const EnumBudget& budget = EnumBudget());

/// For a ring graded by the clamped-addition monoid: checks that the
/// canonical map onto the associated graded ring of its filtration is a
/// graded isomorphism.  Conditions, in order: "bijectivity", "additivity",
/// "multiplicativity", "degree preservation".
Verdict grading_roundtrip_iso(const GradedGammaRing& g,
                              const EnumBudget& budget = EnumBudget());

/// Powers of an ideal: chain[0] = R, chain[1] = I, and chain[k] is the
/// subgroup generated by chain[k-1] Gamma I.  stabilization is the smallest
/// k >= 1 with chain[k] equal to chain[k+1]; the chain keeps levels
/// 0..stabilization.
struct AdicChain {
  std::vector<AbelianGroup> chain;
  std::size_t stabilization;
};
AdicChain adic_chain(const GammaRing& r, const Ideal& ideal,
                     const EnumBudget& budget = EnumBudget());

}  // namespace gammalib

#endif
