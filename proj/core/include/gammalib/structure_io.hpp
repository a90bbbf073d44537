#ifndef GAMMALIB_STRUCTURE_IO_HPP
#define GAMMALIB_STRUCTURE_IO_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gammalib/filtration.hpp"
#include "gammalib/gamma_module.hpp"
#include "gammalib/gamma_ring.hpp"
#include "gammalib/grading.hpp"
#include "gammalib/hom.hpp"
#include "gammalib/semigroup.hpp"

namespace gammalib {

/// A named collection of structures loaded from a single JSON structure
/// file.  The file is an object mapping names to declarations; declarations
/// reference each other by name (any field that accepts a structure also
/// accepts a name string).  Resolution is memoized per name and cyclic
/// definitions are rejected.
///
/// Eager loading (the default) also runs every structure's validator, so a
/// fully loaded set is known-good.  Lazy loading defers the law checks: the
/// structures are materialized as candidates and the verdict-producing
/// checks decide their status later.  Structural requirements (well-formed
/// JSON, resolvable names, element membership, subgroup closure) are always
/// enforced at load time.
class StructureSet {
 public:
  static StructureSet load_file(const std::string& path, bool lazy = false,
                                const EnumBudget& budget = EnumBudget());
  static StructureSet load_text(const std::string& text, bool lazy = false,
                                const EnumBudget& budget = EnumBudget());

  /// Declared names in sorted order.
  std::vector<std::string> names() const;
  bool has(const std::string& name) const;
  /// Canonical kind of the declaration: "group", "semigroup",
  /// "semigroup_map", "table", "matrix", "semigroup_ring", "product",
  /// "opposite", "polynomial", "quotient", "graded", "internal_grading",
  /// "filtration", "module", "graded_module", "filtered_module", "hom".
  const std::string& kind_of(const std::string& name) const;

  AbelianGroup group(const std::string& name) const;
  FiniteSemigroup semigroup(const std::string& name) const;
  SemigroupMap semigroup_map(const std::string& name) const;

  /// True for any ring-producing declaration, graded or not.
  bool is_ring(const std::string& name) const;
  /// The flat ring behind a ring-producing declaration.
  GammaRing ring(const std::string& name) const;
  /// True when the declaration carries a grading (graded, internal_grading,
  /// semigroup_ring, polynomial, and products/opposites of graded rings).
  bool is_graded_ring(const std::string& name) const;
  /// The verified graded ring; validates the candidate now if the set was
  /// loaded lazily.
  GradedGammaRing graded_ring(const std::string& name) const;
  /// The unvalidated grading candidate, for verdict-producing checks.
  InternalGrading grading_candidate(const std::string& name) const;

  Filtration filtration(const std::string& name) const;
  GammaModule module(const std::string& name) const;
  bool is_graded_module(const std::string& name) const;
  GradedGammaModule graded_module(const std::string& name) const;
  InternalModuleGrading module_grading_candidate(const std::string& name) const;
  FilteredModule filtered_module(const std::string& name) const;
  ModuleHom hom(const std::string& name) const;
  /// Declaration names of a hom's source and target; empty strings when the
  /// endpoint was declared inline rather than by reference.
  std::pair<std::string, std::string> hom_endpoints(
      const std::string& name) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

/// Serializes a flat ring as a one-declaration structure file of kind
/// "table".  Carrier and gamma are relabelled onto canonical cyclic
/// coordinates (via cyclic_basis), so the output loads with cyclic_product
/// groups and is byte-deterministic for equal inputs.  Entries with zero
/// product are omitted.
std::string emit_ring(const GammaRing& r, const std::string& name);

/// Serializes a graded ring as a one-declaration structure file of kind
/// "graded": explicit type table, per-degree component groups in canonical
/// cyclic coordinates, and the nonzero per-degree products.
std::string emit_graded_ring(const GradedGammaRing& g, const std::string& name);

}  // namespace gammalib

#endif
