#ifndef GAMMALIB_VERDICT_HPP
#define GAMMALIB_VERDICT_HPP

#include <cstdint>
#include <string>

#include "gammalib/errors.hpp"

namespace gammalib {

// Outcome of a single check.  A fail always carries the violated law and the
// lexicographically first witness; pass carries neither.  error and skipped
// are produced by the dispatch layer when a check could not run at all.
struct Verdict {
  enum class Status { pass, fail, error, skipped };

  Status status = Status::pass;
  std::string law;      // identifier of the violated law or condition
  std::string witness;  // rendered witness tuple, lexicographically first
  std::string detail;   // reason for error / skipped

  bool passed() const { return status == Status::pass; }

  static Verdict pass() { return Verdict{}; }
  static Verdict fail(std::string law, std::string witness) {
    return Verdict{Status::fail, std::move(law), std::move(witness), ""};
  }
  static Verdict error(std::string detail) {
    return Verdict{Status::error, "", "", std::move(detail)};
  }
  static Verdict skipped(std::string detail) {
    return Verdict{Status::skipped, "", "", std::move(detail)};
  }
};

std::string to_string(Verdict::Status s);

// Counts primitive checks during an exhaustive enumeration and throws
// BudgetExceededError once the limit is crossed.  Checks degrade loudly,
// never silently: a partial enumeration is never reported as a verdict.
class EnumBudget {
 public:
  static constexpr std::uint64_t kDefaultLimit = 1'000'000;

  explicit EnumBudget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}

  void charge(std::uint64_t n = 1) const {
    used_ += n;
    if (used_ > limit_) {
      throw BudgetExceededError("enumeration budget of " +
                                std::to_string(limit_) +
                                " primitive checks exceeded");
    }
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  mutable std::uint64_t used_ = 0;
};

// Carrier construction cap.  Constructions whose result would exceed this
// many elements are rejected with BudgetExceededError.
inline constexpr std::uint64_t kMaxCarrierSize = 4096;

}  // namespace gammalib

#endif
