#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "plrs/core.hpp"
#include "plrs/verdict.hpp"

namespace plrs {

using Rational = mpq_class;

/// Certified isolating interval for the principal root.
///
/// Either an exact integer root (lo == hi), or the dyadic interval
/// (a / 2^s, (a + 1) / 2^s) with p(lo) < 0 < p(hi). All monic integer
/// polynomials have only integer rational roots, so a non-exact bracket never
/// collapses.
class RootBracket {
 public:
  Rational lo() const;
  Rational hi() const;
  Rational width() const;
  std::optional<std::uint64_t> exact_root() const;
  bool is_exact() const noexcept { return exact_; }
  /// Midpoint as a double; the exact root when there is one.
  double approx() const;
  /// Width is 2^-precision_bits() for non-exact brackets.
  unsigned precision_bits() const noexcept { return shift_; }

 private:
  friend class CharPoly;
  BigInt numerator_ = 0;
  unsigned shift_ = 0;
  bool exact_ = false;
};

/// p(x) = x^L - sum_{i=1}^{L} c_i x^{L-i}. Exactly one positive root, simple,
/// and p(t) > 0 iff t is above it.
class CharPoly {
 public:
  explicit CharPoly(Coefficients c) : coefficients_(std::move(c)) {}

  const Coefficients& coefficients() const noexcept { return coefficients_; }
  std::size_t degree() const noexcept { return coefficients_.length(); }

  Rational eval(const Rational& t) const;
  int sign_at(const Rational& t) const;
  /// Sign of p(numerator / 2^shift), in integer arithmetic only.
  int sign_at_dyadic(const BigInt& numerator, unsigned shift) const;

  /// Unit-width bracket between consecutive integers, or the exact integer root.
  RootBracket isolate() const;
  /// One bisection step; no-op on exact brackets.
  void bisect(RootBracket& bracket) const;
  void refine_to_bits(RootBracket& bracket, unsigned bits) const;
  RootBracket root(double tol) const;

 private:
  Coefficients coefficients_;
};

/// Value of p at t >= 0, exactly.
Rational char_poly_eval(const Coefficients& c, const Rational& t);

inline constexpr double kDefaultRootTolerance = 1e-12;

RootBracket principal_root(const Coefficients& c, double tol = kDefaultRootTolerance);

/// Exact ordering of two principal roots. Brackets are refined until disjoint;
/// equality is decided by a rational gcd of the two polynomials.
std::strong_ordering compare_principal_roots(const Coefficients& a, const Coefficients& b);

/// N_L = ceil(L(L+1)/4)
std::uint64_t lambda_n(std::size_t length);
/// [1, 0^{L-2}, N_L + 1]
Coefficients lambda_coefficients(std::size_t length);

struct LambdaThreshold {
  std::size_t length;
  std::uint64_t n_l;
  RootBracket lambda;
};

/// Root of x^L - x^{L-1} - N_L - 1. Throws Error{InvalidArgument} for L < 2.
LambdaThreshold lambda_threshold(std::size_t length, double tol = kDefaultRootTolerance);

/// Root-size classification: p(2) < 0 is incomplete (proven); a root below
/// lambda_L is complete only under the minimal-incomplete-root conjecture;
/// anything else lies in the indeterminate band [lambda_L, 2]. Length-1
/// vectors have no threshold and can only be rejected through p(2).
Verdict triage(const Coefficients& c);

struct PlsMinimum {
  Coefficients minimizer;
  RootBracket root;
};

/// The vector with the smallest principal root among those of length L with
/// coefficient sum S + 1, namely [1, 0^{L-2}, S] (or [S+1] for L = 1).
PlsMinimum min_root_in_pls(std::size_t length, std::uint64_t s);

/// All valid vectors of length L and coefficient sum S + 1, lexicographic.
/// Throws Error{CostCap} beyond 10^6 vectors.
std::vector<Coefficients> enumerate_pls(std::size_t length, std::uint64_t s);

struct ThresholdReport {
  std::size_t length = 0;
  std::size_t candidates = 0;  // valid vectors with c_i <= 2^i and p(2) > 0
  std::size_t incomplete = 0;
  std::size_t unresolved = 0;
  std::size_t oracle_disagreements = 0;
  std::optional<Coefficients> frontier{};  // incomplete vector with the smallest root
  std::optional<RootBracket> frontier_root{};
  LambdaThreshold lambda;
  /// Ordering of the frontier root against lambda_L, when a frontier exists.
  std::optional<std::strong_ordering> frontier_vs_lambda{};
};

/// Exhaustive search of the finite space where incomplete vectors can have a
/// principal root below 2. Throws Error{CostCap} for L > 5.
ThresholdReport exact_threshold_search(std::size_t length);

struct GapOrder {
  double gap1;  // r - q
  double gap2;  // s - r
  /// r - q > s - r was established by exact bracket arithmetic.
  bool certified;
};

/// q < r < s are the roots of x^L - x^{L-1} - t for t = k, k+1, k+2.
GapOrder root_order_gap(std::size_t length, std::uint64_t k);

struct DensenessReport {
  std::size_t length = 0;
  double epsilon = 0;
  std::vector<std::pair<std::uint64_t, RootBracket>> roots;  // k -> root of [1,0^{L-2},k]
  double max_gap = 0;
  double covered_lo = 0;
  double covered_hi = 0;
  bool strictly_increasing = true;  // certified
  bool gaps_decreasing = true;      // certified
  bool ends_at_two = false;
  bool max_gap_below_epsilon = false;  // certified via bracket endpoints
};

/// Roots of [1, 0^{L-2}, k] for N_L < k <= 2^{L-1}. Throws Error{CostCap}
/// for L > 22.
DensenessReport denseness_scan(std::size_t length, double epsilon, double tol = 1e-12);

}  // namespace plrs
