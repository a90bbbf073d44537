#ifndef GAMMALIB_DISPATCH_HPP
#define GAMMALIB_DISPATCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gammalib/structure_io.hpp"
#include "gammalib/verdict.hpp"

namespace gammalib {

/// One executed check: a stable id ("<operation>:<target>"), the target
/// name, the verdict, and the wall time.  Timing is informational only and
/// is excluded from comparison-mode serialization.
struct CheckRecord {
  std::string id;
  std::string target;
  Verdict verdict;
  double ms = 0.0;
};

/// An executed batch of checks.  Records are kept sorted by id, so reports
/// over identical inputs serialize identically (timing aside).
struct Report {
  std::vector<CheckRecord> checks;

  void add(CheckRecord rec);
  std::size_t count(Verdict::Status s) const;
  /// 0 when nothing failed or errored, 1 otherwise.
  int exit_code() const;
  /// {"checks":[{"id","target","verdict","witness",...}],"summary":{...}};
  /// `timing` adds per-record "ms" fields.
  std::string to_json(bool timing) const;
  std::string to_text(bool timing) const;
};

/// A fully parsed command.  `op` is the canonical operation name:
///   check-axioms, check-grading, check-strong, check-crossed,
///   check-filtration, check-module, check-graded-module,
///   check-filtered-module, regrade, restrict, coarsen, gr, adic,
///   gr-module, quotient-module, k-prime, hom-check, hom-degree,
///   hom-decompose, hom-enumerate, end-ring, emit.
/// An empty target list means "every structure the operation applies to".
struct Command {
  std::string op;
  std::vector<std::string> targets;
  std::string phi;         // regrade: name of a declared semigroup map
  std::vector<std::string> H;  // restrict: degree labels
  std::vector<std::string> N;  // coarsen: degree labels of the subgroup
  std::string ideal_json;  // adic: element list as JSON
  std::string subgroup_json;  // quotient-module / k-prime: element list
  std::string h;           // hom-degree: degree label
  std::string out;         // output path for emitted structures
  std::uint64_t max_enum = EnumBudget::kDefaultLimit;  // per-check budget
};

/// Runs one command against a loaded structure set.  Every target yields
/// exactly one record; exceptions become error records and exhausted
/// budgets become skipped records.  Emitting operations write their output
/// file as a side effect when `out` is set.
Report run_command(const StructureSet& set, const Command& cmd);

}  // namespace gammalib

#endif
