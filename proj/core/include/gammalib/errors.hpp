#ifndef GAMMALIB_ERRORS_HPP
#define GAMMALIB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gammalib {

// Base class for all errors raised by the library.  Errors are conditions
// that make a request meaningless (malformed input, incompatible structures,
// exhausted budgets); they are distinct from check verdicts, which report on
// well-posed questions.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An element tuple that does not belong to the group it was offered to.
struct MalformedElementError : Error {
  using Error::Error;
};

// A declared structure violates its own closure or validity requirements
// (non-subgroup element set, non-associative table, broken chain, ...).
struct InvalidStructureError : Error {
  using Error::Error;
};

// Two structures that must agree do not (mismatched gamma groups,
// mismatched grading types, mismatched base rings).
struct IncompatibilityError : Error {
  using Error::Error;
};

// The operation is defined only for a narrower class of inputs
// (e.g. grading type must be a group).
struct UnsupportedStructureError : Error {
  using Error::Error;
};

// An enumeration exceeded its primitive-check budget or a construction
// exceeded the carrier size cap.
struct BudgetExceededError : Error {
  using Error::Error;
};

// A stated precondition of the operation does not hold for the inputs
// (map not surjective, element not invertible, module not finitely
// generated, ...).
struct PreconditionError : Error {
  using Error::Error;
};

// A consistency condition that is mathematically forced was observed to
// fail.  Indicates a bug in the library or memory corruption, never bad
// user input.
struct InternalAssertionError : Error {
  using Error::Error;
};

// Structure-file syntax errors.
struct ParseError : Error {
  using Error::Error;
};

// A name used in a structure file or command has no definition.
struct UnresolvedReferenceError : Error {
  using Error::Error;
};

}  // namespace gammalib

#endif
