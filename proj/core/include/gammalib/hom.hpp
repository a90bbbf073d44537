#ifndef GAMMALIB_HOM_HPP
#define GAMMALIB_HOM_HPP

#include "gammalib/gamma_module.hpp"

namespace gammalib {

/// A map between two modules over the same ring, given by a value table
/// over the source carrier order.  Whether it is a homomorphism is decided
/// by check_hom.
struct ModuleHom {
  GammaModule source;
  GammaModule target;
  std::vector<Element> values;

  /// values at m; validates membership and the table length.
  Element apply(const Element& m) const;
};

/// Conditions, in order: "additivity" f(x+y) = f(x)+f(y), "equivariance"
/// f(r a m) = r a f(m).  Both modules must sit over the same flat ring.
Verdict check_hom(const ModuleHom& f, const EnumBudget& budget = EnumBudget());

/// Twisted variant: equivariance reads f(r a m) = r phi(a) f(m), with phi a
/// value table over the gamma group's element order.
Verdict check_hom_phi(const ModuleHom& f, const std::vector<Element>& phi,
                      const EnumBudget& budget = EnumBudget());

ModuleHom zero_hom(const GammaModule& m, const GammaModule& k);
ModuleHom identity_hom(const GammaModule& m);
/// Pointwise sum; sources and targets must match.
ModuleHom add_homs(const ModuleHom& f, const ModuleHom& g);
/// second(first(x)); first's target must be second's source.
ModuleHom compose_homs(const ModuleHom& second, const ModuleHom& first);

/// True if f maps each M_g into K_{h*g}.  The two graded modules must share
/// the grading type and the flat ring; f is only shape-checked here.
bool hom_has_degree(const GradedGammaModule& m, const GradedGammaModule& k,
                    const ModuleHom& f, std::size_t h,
                    const EnumBudget& budget = EnumBudget());

/// All degrees h for which hom_has_degree holds (all of them for the zero
/// map, at most one otherwise).
std::vector<std::size_t> hom_degrees(const GradedGammaModule& m,
                                     const GradedGammaModule& k,
                                     const ModuleHom& f,
                                     const EnumBudget& budget = EnumBudget());

/// The degree-g component of a homomorphism over a group-type grading:
/// f_g(m) = sum over h of the degree-h part of f(the degree-(g^{-1}h) part
/// of m).  Requires f to pass check_hom.
ModuleHom hom_component(const GradedGammaModule& m, const GradedGammaModule& k,
                        const ModuleHom& f, std::size_t g,
                        const EnumBudget& budget = EnumBudget());

/// Splits a homomorphism out of a finitely generated source into its degree
/// components.  Asserts that the components sum back to f, that each one is
/// a homomorphism carrying its degree, and that nonzero components have
/// exactly one degree.
struct HomDecomposition {
  std::vector<ModuleHom> components;  // indexed by degree
  std::vector<std::size_t> support;   // degrees with a nonzero component
};
HomDecomposition decompose_hom(const GradedGammaModule& m,
                               const GradedGammaModule& k, const ModuleHom& f,
                               const EnumBudget& budget = EnumBudget());

/// Every homomorphism between the two modules, sorted by value table.
/// Generator images are chosen over an independent cyclic generating set of
/// the source and extended additively; the pointwise-addition closure of
/// the result is asserted.
std::vector<ModuleHom> enumerate_homs(const GammaModule& m,
                                      const GammaModule& k,
                                      const EnumBudget& budget = EnumBudget());

/// The endomorphism ring of a finitely generated graded module over a
/// group-type grading: carrier is the hom set under pointwise addition
/// (encoded as value-table tuples), gamma is Z_e for e the exponent of the
/// module carrier, the product (f k g)(x) = k f(g(x)) is scaled composition,
/// and degree g collects the homomorphisms of degree g.  The ring laws and
/// the grading are verified; homs[i] is the homomorphism behind carrier
/// element i, and (id, 1) is a unity.
struct EndomorphismReport {
  GradedGammaRing ring;
  std::vector<ModuleHom> homs;
};
EndomorphismReport endomorphism_graded_ring(
    const GradedGammaModule& m, const EnumBudget& budget = EnumBudget());

}  // namespace gammalib

#endif
