#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plrs/analytic.hpp"
#include "plrs/brown.hpp"
#include "plrs/families.hpp"

namespace plrs {

/// Valid vectors of exactly `length` coefficients with every c_i <= cap, in
/// lexicographic order.
std::vector<Coefficients> enumerate_space(std::size_t length, std::uint64_t cap);

/// Valid vectors of length 1..max_length with every c_i <= cap.
std::vector<Coefficients> enumerate_space_upto(std::size_t max_length, std::uint64_t cap);

struct ScanEntry {
  Coefficients coefficients;
  Verdict engine;
  std::optional<Verdict> oracle;  // absent when the subset-sum budget was exceeded
};

struct Scan2l1Report {
  std::size_t length = 0;
  std::uint64_t cap = 0;
  std::size_t window = 0;
  std::size_t scanned = 0;
  std::size_t passing_window = 0;  // B_n >= 0 for every n <= window
  std::vector<ScanEntry> counterexamples;
  std::vector<Coefficients> unresolved;
};

/// Searches for vectors passing Brown's criterion through `window` terms
/// (default 2L-1) yet shown incomplete later.
Scan2l1Report scan_2l1(std::size_t length, std::uint64_t cap, std::size_t window = 0,
                       unsigned jobs = 1, const CheckOptions& options = {});

struct MinRootReport {
  std::size_t length = 0;
  std::uint64_t sum_cap = 0;
  std::size_t scanned = 0;
  std::size_t incomplete = 0;
  std::size_t oracle_confirmed = 0;
  std::size_t unresolved = 0;
  std::optional<Coefficients> frontier{};
  std::optional<RootBracket> frontier_root{};
  LambdaThreshold lambda;
  std::optional<std::strong_ordering> frontier_vs_lambda{};
  /// frontier root - lambda_L, for display.
  double margin = 0;
  /// An incomplete vector with a root strictly below lambda_L.
  bool counterexample() const {
    return frontier_vs_lambda && *frontier_vs_lambda == std::strong_ordering::less;
  }
};

/// Smallest principal root among incomplete vectors of length L with
/// coefficient sum <= sum_cap.
MinRootReport min_root_frontier(std::size_t length, std::uint64_t sum_cap, unsigned jobs = 1,
                                const CheckOptions& options = {});

struct FamilyRow {
  FamilyShape shape;
  std::optional<FamilyBound> bound;  // absent outside the formula's range
  MaxNSearch search;
  /// "match", "mismatch", "no_formula" or "unresolved".
  std::string status;
};

std::vector<FamilyRow> family_table(const std::vector<FamilyShape>& shapes, unsigned jobs = 1,
                                    const CheckOptions& options = {});

}  // namespace plrs
