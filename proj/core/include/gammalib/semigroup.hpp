#ifndef GAMMALIB_SEMIGROUP_HPP
#define GAMMALIB_SEMIGROUP_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gammalib/verdict.hpp"

namespace gammalib {

/// A finite semigroup presented by a Cayley table over labelled elements.
/// Elements are indices into labels(); the table is validated for totality
/// and associativity at construction.
class FiniteSemigroup {
 public:
  /// Throws InvalidStructureError with a witnessing triple if the table is
  /// not associative, or if shape/labels are malformed.
  FiniteSemigroup(std::vector<std::string> labels,
                  std::vector<std::vector<std::size_t>> table);

  std::size_t size() const;
  const std::vector<std::string>& labels() const;
  const std::string& label(std::size_t i) const;
  /// Index of a label; throws UnresolvedReferenceError if unknown.
  std::size_t index_of(const std::string& label) const;

  std::size_t mul(std::size_t a, std::size_t b) const;

  bool is_commutative() const;
  /// Two-sided identity, if one exists.
  std::optional<std::size_t> identity() const;
  /// True if the table is a group (identity and two-sided inverses).
  bool is_group() const;
  /// Inverse of a, when the semigroup is a group.
  std::size_t inverse(std::size_t a) const;

  bool same_semigroup(const FiniteSemigroup& other) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Validates a candidate table without constructing.  Returns pass, or fail
/// with the violated condition ("associativity", "commutativity") and the
/// lexicographically first witnessing tuple.  Commutativity is only checked
/// when require_commutative is set; it is not part of semigroup validity.
Verdict check_semigroup_table(const std::vector<std::string>& labels,
                              const std::vector<std::vector<std::size_t>>& table,
                              bool require_commutative = false);

/// Cyclic group of order n with labels e, g, g2, ..., g{n-1}.
FiniteSemigroup cyclic_group_semigroup(std::size_t n);

/// One-element semigroup {e}.
FiniteSemigroup trivial_semigroup();

/// The monoid {0, 1, ..., cap} under addition clamped at cap.  Used as the
/// grading type of associated graded structures.
FiniteSemigroup truncated_addition_monoid(std::size_t cap);

/// Subsemigroup on the given element indices; throws InvalidStructureError
/// with a witness if the subset is not closed under the product.
FiniteSemigroup subsemigroup(const FiniteSemigroup& g,
                             const std::vector<std::size_t>& members);

/// Quotient of a group by a subgroup given as element indices.  Requires g
/// to be a commutative group (so every subgroup is normal); coset labels are
/// taken from the least-index representative.
struct QuotientSemigroup {
  FiniteSemigroup quotient;
  std::vector<std::size_t> coset_of;  // original index -> quotient index
};
QuotientSemigroup quotient_group_semigroup(
    const FiniteSemigroup& g, const std::vector<std::size_t>& subgroup);

/// A map between finite semigroups given by images per domain element.
class SemigroupMap {
 public:
  /// Throws InvalidStructureError with the first witnessing pair if the map
  /// does not respect the products.
  SemigroupMap(FiniteSemigroup domain, FiniteSemigroup codomain,
               std::vector<std::size_t> images);

  const FiniteSemigroup& domain() const;
  const FiniteSemigroup& codomain() const;
  std::size_t apply(std::size_t a) const;
  bool is_surjective() const;
  /// Domain indices mapping to h.
  std::vector<std::size_t> fiber(std::size_t h) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Validates candidate images without constructing.
Verdict check_semigroup_map(const FiniteSemigroup& domain,
                            const FiniteSemigroup& codomain,
                            const std::vector<std::size_t>& images);

SemigroupMap identity_map(const FiniteSemigroup& g);
SemigroupMap compose(const SemigroupMap& second, const SemigroupMap& first);

}  // namespace gammalib

#endif
