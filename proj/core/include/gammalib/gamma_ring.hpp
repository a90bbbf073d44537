#ifndef GAMMALIB_GAMMA_RING_HPP
#define GAMMALIB_GAMMA_RING_HPP

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "gammalib/abelian_group.hpp"
#include "gammalib/verdict.hpp"

namespace gammalib {

/// Total product rule R x Gamma x R -> R, evaluated on demand.
using ProductFn =
    std::function<Element(const Element&, const Element&, const Element&)>;

/// A finite ring with coefficients acting through a second abelian group:
/// (R,+) abelian, Gamma abelian, and a tri-additive product R x Gamma x R -> R
/// satisfying (x a y) b z = x a (y b z).  Whether a given instance actually
/// satisfies those laws is decided by check_axioms, not assumed.
///
/// Values are immutable; the product rule may be a dense table or any
/// structured evaluator.
class GammaRing {
 public:
  GammaRing(AbelianGroup carrier, AbelianGroup gamma, ProductFn product);

  /// Dense-table ring.  Each entry is {r, gamma, s, value}; omitted triples
  /// default to zero.  Entries are validated for membership; duplicate
  /// triples are rejected.  The dense table is capped at 10^6 entries.
  static GammaRing from_table(
      AbelianGroup carrier, AbelianGroup gamma,
      const std::vector<std::array<Element, 4>>& entries);

  /// Dense-table ring from a flat result-index table laid out as
  /// (r_index * |Gamma| + gamma_index) * |R| + s_index.
  static GammaRing from_dense_table(AbelianGroup carrier, AbelianGroup gamma,
                                    std::vector<std::uint32_t> table);

  const AbelianGroup& carrier() const;
  const AbelianGroup& gamma() const;
  Element product(const Element& r, const Element& g, const Element& s) const;

 private:
  GammaRing() = default;
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Materializes the product rule as a flat result-index table in
/// from_dense_table layout.  Capped at 10^6 entries.
std::vector<std::uint32_t> dense_product_table(const GammaRing& r);

/// Exhaustively checks the four defining laws:
///   left distributivity   (x+y) a z = x a z + y a z
///   gamma additivity      x (a+b) z = x a z + x b z
///   right distributivity  x a (y+z) = x a y + x a z
///   associativity         (x a y) b z = x a (y b z)
/// Laws are checked in this order; the witness is the lexicographically
/// first violating tuple of the first violated law.  A product value outside
/// the carrier raises InvalidStructureError.
Verdict check_axioms(const GammaRing& r,
                     const EnumBudget& budget = EnumBudget());

enum class Sidedness { left, right, two_sided };

/// Checks R Gamma I <= I (left), I Gamma R <= I (right), or both.  The
/// candidate must already be a subgroup of the carrier.
Verdict is_ideal(const GammaRing& r, const AbelianGroup& candidate,
                 Sidedness side, const EnumBudget& budget = EnumBudget());

/// A verified ideal.
struct Ideal {
  AbelianGroup subgroup;
  Sidedness side;
};

/// Validates and wraps; throws InvalidStructureError if is_ideal fails.
Ideal make_ideal(const GammaRing& r, const std::vector<Element>& elements,
                 Sidedness side);

/// A two-sided unity: 1 gamma0 x = x gamma0 1 = x for all x.
struct Unity {
  Element one;
  Element gamma0;
};

/// All pairs (one, gamma0), in ascending (gamma0, one) order.  For a fixed
/// gamma0 at most one unity can exist; that uniqueness is asserted.
std::vector<Unity> find_unities(const GammaRing& r);

/// Inverse of x with respect to the unity, if any: the unique s with
/// x gamma0 s = s gamma0 x = one.
std::optional<Element> inverse_of(const GammaRing& r, const Unity& unity,
                                  const Element& x);

/// The group of invertible elements under x gamma0 y.
struct UnitGroup {
  Unity unity;
  std::vector<Element> units;     // ascending
  std::vector<Element> inverses;  // aligned with units
};

UnitGroup unit_group(const GammaRing& r, const Unity& unity);

/// Checks that f : R1 -> R2 (value table over R1's carrier order) together
/// with phi : Gamma1 -> Gamma2 (value table over Gamma1's order) is a ring
/// homomorphism: both additive and f(x g y) = f(x) phi(g) f(y).
Verdict check_phi_homomorphism(const GammaRing& src, const GammaRing& dst,
                               const std::vector<Element>& f,
                               const std::vector<Element>& phi,
                               const EnumBudget& budget = EnumBudget());

/// Throws IncompatibilityError unless the two rings have the same carrier,
/// the same gamma group and pointwise equal products.
void require_same_flat_ring(const GammaRing& a, const GammaRing& b,
                            const EnumBudget& budget = EnumBudget());

/// True if f (value table over src's carrier order) is a bijective
/// homomorphism with phi = identity; the gamma groups must agree.
bool is_gamma_ring_isomorphism(const GammaRing& src, const GammaRing& dst,
                               const std::vector<Element>& f,
                               const EnumBudget& budget = EnumBudget());

/// Rectangular matrices over Z_k: carrier m x n, gamma n x m, product
/// r g s by matrix multiplication mod k.  Tuples are row-major.
GammaRing matrix_gamma_ring(Int k, std::size_t m, std::size_t n);

/// Componentwise product; all factors must share an identical gamma group.
GammaRing direct_product(const std::vector<GammaRing>& factors);

/// Same carrier and gamma, product reversed in the outer arguments.
GammaRing opposite(const GammaRing& r);

/// Quotient by a verified two-sided ideal.  The carrier is the quotient
/// group on canonical representatives; independence of the product from
/// representative choice is re-checked exhaustively.
GammaRing quotient_by_ideal(const GammaRing& r, const Ideal& ideal,
                            const EnumBudget& budget = EnumBudget());

}  // namespace gammalib

#endif
