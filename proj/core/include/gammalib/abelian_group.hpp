#ifndef GAMMALIB_ABELIAN_GROUP_HPP
#define GAMMALIB_ABELIAN_GROUP_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gammalib/element.hpp"
#include "gammalib/verdict.hpp"

namespace gammalib {

/// A finite abelian group with exact arithmetic on element tuples.
///
/// Four backings share one interface:
///   * cyclic_product  - Z_{n1} x ... x Z_{nk}; elements are residue tuples.
///   * subgroup        - an extensional subgroup of a parent group; elements
///                       are parent tuples.
///   * quotient        - parent modulo a subgroup; elements are the
///                       lexicographically least coset representatives.
///   * direct_sum      - concatenation of factor groups; elements are the
///                       concatenated factor tuples.
///
/// Values are immutable and cheap to copy.  Element enumeration order is
/// lexicographic and is the canonical order everywhere (witnesses, indices,
/// serialization).
class AbelianGroup {
 public:
  enum class Kind { cyclic_product, subgroup, quotient, direct_sum };

  /// Z_{moduli[0]} x ... x Z_{moduli[k-1]}.  Moduli must be >= 1.  An empty
  /// list is the trivial group with the empty tuple as its only element.
  static AbelianGroup cyclic_product(std::vector<Int> moduli);

  /// The subgroup of `parent` with exactly the given elements.  Validates
  /// membership, zero, and closure under addition; throws
  /// InvalidStructureError with a witness otherwise.
  static AbelianGroup subgroup(AbelianGroup parent,
                               std::vector<Element> elements);

  /// parent / kernel on lexicographically least coset representatives.
  /// `kernel` must be a subgroup of `parent` (same element representation).
  static AbelianGroup quotient(AbelianGroup parent, AbelianGroup kernel);

  static AbelianGroup direct_sum(std::vector<AbelianGroup> factors);

  Kind kind() const;
  std::size_t size() const;
  std::size_t arity() const;

  Element zero() const;
  Element add(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element sub(const Element& a, const Element& b) const;
  /// k*a by double-and-add; k may be negative.
  Element scale(Int k, const Element& a) const;
  /// Additive order of a (smallest k >= 1 with k*a = 0).
  Int order_of(const Element& a) const;

  /// All elements in lexicographic order.
  const std::vector<Element>& elements() const;
  bool contains(const Element& a) const;
  /// Position of `a` in elements(); throws MalformedElementError if absent.
  std::size_t index_of(const Element& a) const;
  const Element& element(std::size_t i) const;

  /// Extensional equality: same arity, same element set, same addition.
  bool same_group(const AbelianGroup& other) const;
  /// True if every element of this group lies in `parent` and the two
  /// groups add compatibly (this is a subgroup-style view into parent).
  bool subset_of(const AbelianGroup& parent) const;

  bool is_trivial() const { return size() == 1; }

  // cyclic_product only
  const std::vector<Int>& moduli() const;

  // subgroup / quotient only
  const AbelianGroup& parent() const;

  // quotient only
  const AbelianGroup& kernel() const;
  /// Maps a parent element to the canonical representative of its coset.
  Element reduce(const Element& parent_elem) const;

  // direct_sum only
  const std::vector<AbelianGroup>& factors() const;
  std::size_t block_offset(std::size_t factor) const;
  /// Extracts factor i's tuple from a direct-sum element.
  Element project(std::size_t factor, const Element& a) const;
  /// Places a factor-i tuple into an otherwise-zero direct-sum element.
  Element embed(std::size_t factor, const Element& part) const;

 private:
  struct Impl;
  explicit AbelianGroup(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

/// Smallest subgroup of `parent` containing `generators` (closure
/// iteration).
AbelianGroup subgroup_generated(const AbelianGroup& parent,
                                const std::vector<Element>& generators);

/// Trivial subgroup {0} of `parent`.
AbelianGroup trivial_subgroup(const AbelianGroup& parent);

/// Subgroup of `parent` generated by the union of the given subgroups.
AbelianGroup subgroup_sum(const AbelianGroup& parent,
                          const std::vector<AbelianGroup>& parts);

/// parent / kernel; alias for AbelianGroup::quotient kept for call sites
/// that read better with a verb.
AbelianGroup quotient_group(const AbelianGroup& parent,
                            const AbelianGroup& kernel);

/// Intersection of subgroups of a common parent, as a subgroup view.
AbelianGroup subgroup_intersection(const AbelianGroup& parent,
                                   const std::vector<AbelianGroup>& parts);

/// Result of scanning whether subgroups form an internal direct sum of a
/// parent group.  On success, parts[i] holds the summand decomposition of
/// parent.element(i), indexed like the component list.
struct DirectSumScan {
  bool ok = false;
  std::string witness;
  std::vector<std::vector<Element>> parts;
};

/// Walks every sum of one element per component.  Succeeds when the
/// component sizes multiply to |parent| and all sums are distinct.
DirectSumScan scan_internal_direct_sum(const AbelianGroup& parent,
                                       const std::vector<AbelianGroup>& components,
                                       const EnumBudget& budget = EnumBudget());

/// An independent generating set for `g`: elements b_i of order n_i with
/// g = <b_1> + ... + <b_k> direct.  Produced by repeatedly splitting off a
/// maximal-order cyclic summand; coefficients() solves x = sum c_i b_i.
struct CyclicBasis {
  std::vector<Element> basis;
  std::vector<Int> orders;
  /// coefficient tuples indexed like parent_elements; coefficients[i] are
  /// the unique c with parent_elements[i] = sum c_j basis[j], 0 <= c_j < n_j.
  std::vector<std::vector<Int>> coefficients;
  std::vector<Element> parent_elements;  // group order, same index space
};

CyclicBasis cyclic_basis(const AbelianGroup& g);

}  // namespace gammalib

#endif
