#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "plrs/core.hpp"
#include "plrs/verdict.hpp"

namespace plrs {

/// 2^28 bits (32 MiB).
inline constexpr std::size_t kDefaultBudgetBits = std::size_t{1} << 28;

/// Every subset sum of a prefix, as a bit-vector over [0, bound].
class ReachableSet {
 public:
  ReachableSet() : bits_(1) { bits_.set(0); }

  /// Adds one more summand; throws Error{BudgetExceeded} if the new bound
  /// would need more than `budget_bits` bits.
  void add(std::uint64_t term, std::size_t budget_bits = kDefaultBudgetBits);

  bool contains(std::uint64_t value) const noexcept {
    return value < bits_.size() && bits_.test(value);
  }
  std::uint64_t bound() const noexcept { return bits_.size() - 1; }
  /// Least positive integer in [1, bound] that is not reachable.
  std::optional<std::uint64_t> smallest_missing() const;
  std::vector<std::uint64_t> to_vector() const;

 private:
  boost::dynamic_bitset<std::uint64_t> bits_;
};

ReachableSet reachable_sums(const TermSequence& t, std::size_t budget_bits = kDefaultBudgetBits);

struct RepresentabilityReport {
  std::size_t prefix_length = 0;
  std::uint64_t reachable_bound = 0;
  std::optional<std::uint64_t> smallest_missing;
  /// Missing and smaller than H_{prefix_length+1}: no later term can reach it.
  std::optional<std::uint64_t> permanently_missing;
};

RepresentabilityReport representability(const Coefficients& c, std::size_t prefix_length,
                                        std::size_t budget_bits = kDefaultBudgetBits);

std::optional<std::uint64_t> smallest_unrepresentable(const Coefficients& c,
                                                      std::size_t prefix_length,
                                                      std::size_t budget_bits = kDefaultBudgetBits);

struct OracleResult {
  Verdict verdict;
  /// Report at the prefix where the scan stopped.
  RepresentabilityReport report;
};

/// Ground truth by subset sums. Incomplete as soon as some prefix has a
/// permanently missing value. Complete only if every prefix up to
/// `max_prefix` covers [0, sum] with the next term at most sum + 1, and the
/// gap engine additionally supplies a non-conjectural certificate for the tail.
/// Throws Error{HorizonTooSmall} when max_prefix < 2L-1, Error{BudgetExceeded}.
OracleResult oracle_check(const Coefficients& c, std::size_t max_prefix,
                          std::size_t budget_bits = kDefaultBudgetBits);

inline Verdict oracle_verdict(const Coefficients& c, std::size_t max_prefix,
                              std::size_t budget_bits = kDefaultBudgetBits) {
  return oracle_check(c, max_prefix, budget_bits).verdict;
}

}  // namespace plrs
