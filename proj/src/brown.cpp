#include "plrs/brown.hpp"

#include <algorithm>

#include "plrs/error.hpp"

namespace plrs {

const BigInt& GapTrace::gap(std::size_t n) const {
  if (n < 1 || n > gaps.size()) throw Error(Errc::RangeViolation, "gap index " + std::to_string(n));
  return gaps[n - 1];
}

const BigInt& GapTrace::margin(std::size_t n) const {
  if (n < 1 || n > margins.size()) {
    throw Error(Errc::RangeViolation, "margin index " + std::to_string(n));
  }
  return margins[n - 1];
}

GapTrace gap_trace(const TermSequence& t) {
  const auto terms = t.terms();
  GapTrace trace;
  trace.gaps.reserve(terms.size());
  trace.margins.reserve(terms.empty() ? 0 : terms.size() - 1);
  BigInt prefix_sum = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    trace.gaps.emplace_back(1 + prefix_sum - terms[i]);
    prefix_sum += terms[i];
    if (i + 1 < terms.size()) trace.margins.emplace_back(2 * terms[i] - terms[i + 1]);
  }
  return trace;
}

namespace {

std::optional<std::size_t> first_negative(const GapTrace& trace) {
  for (std::size_t i = 0; i < trace.gaps.size(); ++i) {
    if (sgn(trace.gaps[i]) < 0) return i + 1;
  }
  return std::nullopt;
}

bool strict_window_holds(const GapTrace& trace, std::size_t L) {
  const std::size_t end = 2 * L - 1;
  if (trace.size() < end) return false;
  for (std::size_t n = 1; n <= end; ++n) {
    const int s = sgn(trace.gap(n));
    if (s < 0 || (n >= L && s == 0)) return false;
  }
  return true;
}

// Smallest m in [2L, size] whose L preceding margins are all non-negative.
// For n >= L+1 the margins obey D_n = sum_i c_i D_{n-i}, so such a window
// keeps every later margin non-negative and B never decreases after m.
std::optional<std::size_t> doubling_window(const GapTrace& trace, std::size_t L) {
  std::size_t run = 0;  // consecutive non-negative margins ending at D_{m-1}
  for (std::size_t m = 2; m <= trace.size(); ++m) {
    run = sgn(trace.margin(m - 1)) >= 0 ? run + 1 : 0;
    if (m >= 2 * L && run >= L) return m;
  }
  return std::nullopt;
}

Verdict evaluate(const Coefficients& c, const GapTrace& trace, bool assume_2l1) {
  const std::size_t L = c.length();
  const std::size_t horizon = trace.size();
  if (auto n = first_negative(trace)) {
    return {c, VerdictKind::Incomplete, cert::Failure{*n, trace.gap(*n), std::nullopt}, false,
            horizon};
  }
  if (auto proof = completeness_certificate(trace, L)) {
    return {c, VerdictKind::Complete, std::move(*proof), false, horizon};
  }
  if (assume_2l1) {
    // No failure anywhere in the horizon, in particular none up to 2L-1.
    return {c, VerdictKind::Complete, cert::FamilyRule{"2l1-conjecture"}, true, horizon};
  }
  return {c, VerdictKind::Unknown, cert::HorizonExhausted{horizon}, false, horizon};
}

}  // namespace

std::optional<Certificate> completeness_certificate(const GapTrace& trace, std::size_t length) {
  if (strict_window_holds(trace, length)) return cert::StrictWindow{2 * length - 1};
  if (auto m = doubling_window(trace, length)) {
    for (std::size_t n = 1; n <= *m; ++n) {
      if (sgn(trace.gap(n)) < 0) return std::nullopt;
    }
    return cert::DoublingWindow{*m};
  }
  return std::nullopt;
}

std::size_t default_horizon(std::size_t length) noexcept { return std::max<std::size_t>(4 * length, 64); }

Verdict check_completeness(const Coefficients& c, std::size_t horizon, bool assume_2l1) {
  const std::size_t L = c.length();
  if (horizon < 2 * L - 1) {
    throw Error(Errc::HorizonTooSmall,
                "horizon " + std::to_string(horizon) + " < 2L-1 = " + std::to_string(2 * L - 1));
  }
  return evaluate(c, gap_trace(generate_terms(c, horizon)), assume_2l1);
}

Verdict decide(const Coefficients& c, const CheckOptions& options) {
  const std::size_t L = c.length();
  std::size_t horizon = options.horizon ? options.horizon : default_horizon(L);
  horizon = std::max(horizon, 2 * L - 1);
  const std::size_t cap = std::max(options.horizon_cap, horizon);

  TermSequence terms = generate_terms(c, horizon);
  for (;;) {
    Verdict v = evaluate(c, gap_trace(terms), false);
    if (!v.is_unknown()) return v;
    if (horizon >= cap) {
      return options.assume_2l1 ? evaluate(c, gap_trace(terms), true) : v;
    }
    horizon = std::min(cap, horizon * 2);
    terms = terms.extended(horizon);
  }
}

std::optional<std::size_t> first_failure_index(const Coefficients& c, std::size_t horizon) {
  if (horizon < 1) throw Error(Errc::InvalidArgument, "horizon must be positive");
  return first_negative(gap_trace(generate_terms(c, horizon)));
}

bool doubling_holds(const TermSequence& t) {
  const auto terms = t.terms();
  if (terms.size() < 2) throw Error(Errc::InvalidArgument, "need at least two terms");
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i] > 2 * terms[i - 1]) return false;
  }
  return true;
}

}  // namespace plrs
