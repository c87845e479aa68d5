#include "plrs/families.hpp"

#include <bit>
#include <limits>

#include "plrs/error.hpp"

namespace plrs {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

std::uint32_t ceil_log2(std::uint32_t k) {
  return k <= 1 ? 0 : static_cast<std::uint32_t>(std::bit_width(k - 1));
}

}  // namespace

void check_shape(const FamilyShape& shape) {
  std::visit(overloaded{
                 [](const family::OneZeros&) {},
                 [](const family::OnesZeros& s) {
                   if (s.g < 1 || s.k < 1) throw Error(Errc::ShapeViolation, "need g >= 1 and k >= 1");
                 },
                 [](const family::TwoOnesZeros&) {},
                 [](const family::OneZerosOnes& s) {
                   if (s.length < s.m + 3) throw Error(Errc::ShapeViolation, "need L >= m + 3");
                 },
             },
             shape);
}

std::string family_name(const FamilyShape& shape) {
  return std::visit(overloaded{
                        [](const family::OneZeros&) -> std::string { return "one-zeros"; },
                        [](const family::OnesZeros&) -> std::string { return "ones-zeros"; },
                        [](const family::TwoOnesZeros&) -> std::string { return "two-ones-zeros"; },
                        [](const family::OneZerosOnes&) -> std::string { return "one-zeros-ones"; },
                    },
                    shape);
}

std::vector<std::uint64_t> family_prefix(const FamilyShape& shape) {
  check_shape(shape);
  std::vector<std::uint64_t> out;
  std::visit(overloaded{
                 [&](const family::OneZeros& s) {
                   out.push_back(1);
                   out.insert(out.end(), s.k, 0);
                 },
                 [&](const family::OnesZeros& s) {
                   out.insert(out.end(), s.g, 1);
                   out.insert(out.end(), s.k, 0);
                 },
                 [&](const family::TwoOnesZeros& s) {
                   out = {1, 1};
                   out.insert(out.end(), s.k, 0);
                 },
                 [&](const family::OneZerosOnes& s) {
                   out.push_back(1);
                   out.insert(out.end(), s.length - s.m - 2, 0);
                   out.insert(out.end(), s.m, 1);
                 },
             },
             shape);
  return out;
}

Coefficients family_coefficients(const FamilyShape& shape, std::uint64_t n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "N must be positive");
  auto values = family_prefix(shape);
  values.push_back(n);
  return Coefficients::from_unsigned(std::move(values));
}

FamilyBound bound_one_zeros(std::uint32_t k) {
  const std::uint64_t kk = k;
  return {ceil_div((kk + 2) * (kk + 3), 4), true, "one-zeros"};
}

FamilyBound bound_ones_zeros(std::uint32_t g, std::uint32_t k) {
  if (g < 1 || k < 1) throw Error(Errc::ShapeViolation, "need g >= 1 and k >= 1");
  if (g < k) {
    throw Error(Errc::OutOfProvenRange,
                "g = " + std::to_string(g) + " < k = " + std::to_string(k) + " is not covered");
  }
  if (k + 1 >= 64) throw Error(Errc::RangeViolation, "k too large for 64-bit bounds");
  const std::uint64_t top = std::uint64_t{1} << (k + 1);
  if (g >= k + ceil_log2(k)) return {top - 1, true, "ones-zeros"};
  return {top - ceil_div(k, std::uint64_t{1} << (g - k)), true, "ones-zeros"};
}

FamilyBound bound_two_ones_zeros(std::uint32_t k) {
  // f_{k+6} must fit comfortably in 64 bits.
  if (k > 80) throw Error(Errc::RangeViolation, "k too large for 64-bit bounds");
  std::uint64_t f_prev = 1, f = 2;  // f_1, f_2
  for (std::uint32_t i = 2; i < k + 6; ++i) {
    const std::uint64_t next = f + f_prev;
    f_prev = f;
    f = next;
  }
  const std::uint64_t kk = k;
  return {(f - kk - 5) / 4, false, "two-ones-zeros"};
}

FamilyBound bound_one_zeros_ones(std::uint32_t length, std::uint32_t m) {
  if (length < 2 * m + 2 || length < m + 3) {
    throw Error(Errc::ShapeViolation, "need L >= 2m + 2 and L - m >= 3 (L = " +
                                          std::to_string(length) + ", m = " + std::to_string(m) + ")");
  }
  // Everything over the common denominator 48.
  const std::int64_t L = length, mm = m;
  const std::int64_t numerator =
      12 * (L - mm) * (L + mm + 1) + mm * (mm + 1) * (mm + 2) * (mm + 3) + 24 * (1 - 2 * mm);
  return {static_cast<std::uint64_t>(numerator / 48), false, "one-zeros-ones"};
}

FamilyBound family_bound(const FamilyShape& shape) {
  check_shape(shape);
  return std::visit(overloaded{
                        [](const family::OneZeros& s) { return bound_one_zeros(s.k); },
                        [](const family::OnesZeros& s) {
                          // [1, 0^k, N] is the same vector under either name.
                          return s.g == 1 ? bound_one_zeros(s.k) : bound_ones_zeros(s.g, s.k);
                        },
                        [](const family::TwoOnesZeros& s) { return bound_two_ones_zeros(s.k); },
                        [](const family::OneZerosOnes& s) {
                          return bound_one_zeros_ones(s.length, s.m);
                        },
                    },
                    shape);
}

Verdict classify_family(const FamilyShape& shape, std::uint64_t n) {
  const FamilyBound bound = family_bound(shape);
  Coefficients c = family_coefficients(shape, n);
  const auto kind = n <= bound.max_n ? VerdictKind::Complete : VerdictKind::Incomplete;
  return {std::move(c), kind, cert::FamilyRule{bound.rule_id}, !bound.proven, 0};
}

MaxNSearch search_max_last(const std::vector<std::uint64_t>& prefix, const CheckOptions& options) {
  if (prefix.empty() || prefix.front() == 0) {
    throw Error(Errc::ShapeViolation, "prefix must start with a positive coefficient");
  }
  const std::size_t L = prefix.size() + 1;
  if (L >= 63) throw Error(Errc::CostCap, "length too large for the N search");

  // p(2) = 2^L - sum_{i<L} c_i 2^{L-i} - N; N beyond this value gives a
  // principal root above 2 and cannot be complete.
  BigInt p2_without_last = BigInt(1) << static_cast<mp_bitcnt_t>(L);
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    p2_without_last -= BigInt(prefix[i]) << static_cast<mp_bitcnt_t>(L - 1 - i);
  }
  if (sgn(p2_without_last) < 1) return {0, true};
  const std::uint64_t ceiling = p2_without_last.get_ui();

  MaxNSearch result;
  auto complete = [&](std::uint64_t n) {
    auto values = prefix;
    values.push_back(n);
    const Verdict v = decide(Coefficients::from_unsigned(std::move(values)), options);
    if (v.is_unknown()) result.resolved = false;
    return v.is_complete();
  };

  // Invariant: lo is complete (or 0), hi is not complete (or ceiling + 1).
  std::uint64_t lo = 0, hi = ceiling + 1;
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (complete(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  result.max_n = lo;
  return result;
}

}  // namespace plrs
