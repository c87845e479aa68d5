#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace plrs {

using BigInt = mpz_class;

/// Coefficient vector [c_1, ..., c_L] of a positive linear recurrence.
///
/// Always valid once constructed: L >= 1, c_1 >= 1, c_L >= 1. Indexing through
/// `at` is 1-based to match the usual notation; `values()` exposes the raw
/// storage in order c_1..c_L.
class Coefficients {
 public:
  /// Throws Error{EmptyVector|LeadingZero|TrailingZero|NegativeEntry}.
  static Coefficients validate(std::span<const std::int64_t> values);
  static Coefficients validate(std::initializer_list<std::int64_t> values) {
    return validate(std::span<const std::int64_t>(values.begin(), values.size()));
  }
  /// Same checks for already-unsigned input (only the zero checks can fire).
  static Coefficients from_unsigned(std::vector<std::uint64_t> values);

  std::size_t length() const noexcept { return values_.size(); }
  std::uint64_t at(std::size_t i) const;  // 1-based
  std::uint64_t last() const noexcept { return values_.back(); }
  std::uint64_t max() const noexcept;
  std::uint64_t sum() const noexcept;
  std::span<const std::uint64_t> values() const noexcept { return values_; }

  /// "1,0,3"
  std::string to_string() const;

  friend bool operator==(const Coefficients&, const Coefficients&) = default;
  friend auto operator<=>(const Coefficients& a, const Coefficients& b) {
    return a.values_ <=> b.values_;
  }

 private:
  explicit Coefficients(std::vector<std::uint64_t> values) : values_(std::move(values)) {}
  std::vector<std::uint64_t> values_;
};

/// Exact prefix (H_1, ..., H_n) of the sequence generated by a coefficient
/// vector with the initial conditions H_1 = 1 and
/// H_{n+1} = c_1 H_n + ... + c_n H_1 + 1 for n < L.
class TermSequence {
 public:
  TermSequence(Coefficients c, std::size_t n);

  /// A new sequence with `n` terms; existing terms are reused, not recomputed.
  /// Requesting fewer terms than held truncates.
  TermSequence extended(std::size_t n) const;

  const Coefficients& coefficients() const noexcept { return coefficients_; }
  std::size_t size() const noexcept { return terms_.size(); }
  const BigInt& term(std::size_t n) const;  // 1-based
  std::span<const BigInt> terms() const noexcept { return terms_; }

 private:
  TermSequence(Coefficients c, std::vector<BigInt> terms)
      : coefficients_(std::move(c)), terms_(std::move(terms)) {}
  void grow_to(std::size_t n);

  Coefficients coefficients_;
  std::vector<BigInt> terms_;
};

TermSequence generate_terms(const Coefficients& c, std::size_t n);

}  // namespace plrs
