#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "plrs/brown.hpp"
#include "plrs/core.hpp"
#include "plrs/verdict.hpp"

namespace plrs {

namespace family {

/// [1, 0^k, N]
struct OneZeros {
  std::uint32_t k;
};
/// [1^g, 0^k, N], g >= 1, k >= 1
struct OnesZeros {
  std::uint32_t g;
  std::uint32_t k;
};
/// [1, 1, 0^k, N]
struct TwoOnesZeros {
  std::uint32_t k;
};
/// [1, 0^{L-m-2}, 1^m, N] with L coefficients in total, L >= m+3.
struct OneZerosOnes {
  std::uint32_t length;
  std::uint32_t m;
};

}  // namespace family

using FamilyShape =
    std::variant<family::OneZeros, family::OnesZeros, family::TwoOnesZeros, family::OneZerosOnes>;

struct FamilyBound {
  std::uint64_t max_n;
  bool proven;
  std::string rule_id;
};

/// Throws Error{ShapeViolation} if the shape's own invariants fail.
void check_shape(const FamilyShape& shape);
std::string family_name(const FamilyShape& shape);
/// Every coefficient except the last one.
std::vector<std::uint64_t> family_prefix(const FamilyShape& shape);
Coefficients family_coefficients(const FamilyShape& shape, std::uint64_t n);

/// ceil((k+2)(k+3)/4), proven.
FamilyBound bound_one_zeros(std::uint32_t k);

/// For g >= k + ceil(log2 k): 2^{k+1} - 1. For k <= g < k + ceil(log2 k):
/// 2^{k+1} - ceil(k / 2^{g-k}). Proven. Throws Error{OutOfProvenRange} for g < k.
FamilyBound bound_ones_zeros(std::uint32_t g, std::uint32_t k);

/// floor((f_{k+6} - k - 5) / 4) with the shifted Fibonacci numbers
/// f_1 = 1, f_2 = 2, f_3 = 3, f_4 = 5, ... Conjectural.
FamilyBound bound_two_ones_zeros(std::uint32_t k);

/// floor((L-m)(L+m+1)/4 + m(m+1)(m+2)(m+3)/48 + (1-2m)/2), needing L >= 2m+2
/// and L-m >= 3. Marked unproven: the argument goes through a lemma that is
/// itself conditional on the 2L-1 conjecture.
FamilyBound bound_one_zeros_ones(std::uint32_t length, std::uint32_t m);

FamilyBound family_bound(const FamilyShape& shape);

/// Complete iff N <= bound; the certificate names the rule and the verdict is
/// conjectural whenever the bound is. OnesZeros with g = 1 is the one-zeros
/// vector and uses that rule for every k.
Verdict classify_family(const FamilyShape& shape, std::uint64_t n);

struct MaxNSearch {
  std::uint64_t max_n = 0;  // 0: not even N = 1 is complete
  bool resolved = true;     // false if the engine answered Unknown on a probe
};

/// Largest last coefficient N for which the gap engine proves completeness of
/// prefix + [N]. Relies on completeness being downward closed in the last
/// coefficient. Only N with p(2) >= 0 can be complete, which bounds the search.
MaxNSearch search_max_last(const std::vector<std::uint64_t>& prefix,
                           const CheckOptions& options = {});

inline MaxNSearch search_max_n(const FamilyShape& shape, const CheckOptions& options = {}) {
  check_shape(shape);
  return search_max_last(family_prefix(shape), options);
}

}  // namespace plrs
