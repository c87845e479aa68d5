#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "plrs/core.hpp"
#include "plrs/verdict.hpp"

namespace plrs {

/// Brown's gaps B_n = 1 + sum_{i<n} H_i - H_n and doubling margins
/// D_n = 2 H_n - H_{n+1}, so that B_{n+1} - B_n = D_n.
struct GapTrace {
  std::vector<BigInt> gaps;     // B_1..B_m
  std::vector<BigInt> margins;  // D_1..D_{m-1}

  std::size_t size() const noexcept { return gaps.size(); }
  const BigInt& gap(std::size_t n) const;     // 1-based
  const BigInt& margin(std::size_t n) const;  // 1-based
};

GapTrace gap_trace(const TermSequence& t);

/// Verdict from the first `horizon` terms. Order of evaluation: first failure,
/// strict window, doubling window, then (only with `assume_2l1`) the
/// conjectural 2L-1 rule. Throws Error{HorizonTooSmall} when horizon < 2L-1.
Verdict check_completeness(const Coefficients& c, std::size_t horizon, bool assume_2l1 = false);

struct CheckOptions {
  std::size_t horizon = 0;  // 0: default_horizon(L)
  std::size_t horizon_cap = 4096;
  bool assume_2l1 = false;
};

std::size_t default_horizon(std::size_t length) noexcept;

/// Adaptive driver: starts at the configured horizon and doubles it until a
/// definite verdict appears or the cap is reached. The 2L-1 assumption is only
/// consulted once the cap is exhausted.
Verdict decide(const Coefficients& c, const CheckOptions& options = {});

std::optional<std::size_t> first_failure_index(const Coefficients& c, std::size_t horizon);

/// H_n <= 2 H_{n-1} for every adjacent pair of the prefix. Diagnostic only.
bool doubling_holds(const TermSequence& t);

/// Smallest sound certificate (strict window, then doubling window) found in
/// the trace, ignoring failures. Exposed for the oracle's completeness path.
std::optional<Certificate> completeness_certificate(const GapTrace& trace, std::size_t length);

}  // namespace plrs
