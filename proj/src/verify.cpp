#include "plrs/verify.hpp"

#include <algorithm>

#include "plrs/analytic.hpp"
#include "plrs/brown.hpp"

namespace plrs {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

VerificationResult ok() { return {true, "ok"}; }
VerificationResult fail(std::string why) { return {false, std::move(why)}; }

bool all_of_range(std::span<const std::uint64_t> v, std::size_t from, std::size_t to,
                  std::uint64_t value) {
  return std::all_of(v.begin() + static_cast<std::ptrdiff_t>(from),
                     v.begin() + static_cast<std::ptrdiff_t>(to),
                     [&](std::uint64_t x) { return x == value; });
}

VerificationResult check_failure(const Verdict& v, const cert::Failure& f) {
  if (!v.is_incomplete()) return fail("failure certificate on a non-incomplete verdict");
  if (f.index < 1) return fail("failure index must be positive");
  const GapTrace trace = gap_trace(generate_terms(v.coefficients, f.index));
  if (sgn(trace.gap(f.index)) >= 0) return fail("B_" + std::to_string(f.index) + " is not negative");
  for (std::size_t n = 1; n < f.index; ++n) {
    if (sgn(trace.gap(n)) < 0) return fail("an earlier gap B_" + std::to_string(n) + " is negative");
  }
  return ok();
}

VerificationResult check_window(const Verdict& v, std::size_t m, bool strict) {
  const std::size_t L = v.coefficients.length();
  if (!v.is_complete() || v.conjectural) return fail("window certificate on a non-proven verdict");
  const GapTrace trace = gap_trace(generate_terms(v.coefficients, m));
  auto cert = completeness_certificate(trace, L);
  if (!cert) return fail("no sound window within the first " + std::to_string(m) + " terms");
  if (strict && (m != 2 * L - 1 || !std::holds_alternative<cert::StrictWindow>(*cert))) {
    return fail("strict window does not hold at 2L-1");
  }
  // Otherwise any sound window inside the first m terms proves the verdict.
  return ok();
}

}  // namespace

std::optional<FamilyShape> match_family(const Coefficients& c, const std::string& rule_id) {
  const auto v = c.values();
  const std::size_t L = v.size();
  if (L < 2 || v.front() != 1) return std::nullopt;
  const std::size_t body = L - 1;  // everything but N
  if (rule_id == "one-zeros") {
    if (!all_of_range(v, 1, body, 0)) return std::nullopt;
    return family::OneZeros{static_cast<std::uint32_t>(body - 1)};
  }
  if (rule_id == "ones-zeros") {
    std::size_t g = 0;
    while (g < body && v[g] == 1) ++g;
    if (g == 0 || g == body || !all_of_range(v, g, body, 0)) return std::nullopt;
    return family::OnesZeros{static_cast<std::uint32_t>(g), static_cast<std::uint32_t>(body - g)};
  }
  if (rule_id == "two-ones-zeros") {
    if (L < 3 || v[1] != 1 || !all_of_range(v, 2, body, 0)) return std::nullopt;
    return family::TwoOnesZeros{static_cast<std::uint32_t>(body - 2)};
  }
  if (rule_id == "one-zeros-ones") {
    std::size_t ones_from = body;
    while (ones_from > 1 && v[ones_from - 1] == 1) --ones_from;
    const std::size_t m = body - ones_from;
    if (ones_from < 2 || !all_of_range(v, 1, ones_from, 0)) return std::nullopt;
    return family::OneZerosOnes{static_cast<std::uint32_t>(L), static_cast<std::uint32_t>(m)};
  }
  return std::nullopt;
}

VerificationResult verify_verdict(const Verdict& v) {
  return std::visit(
      overloaded{
          [&](const cert::Failure& f) { return check_failure(v, f); },
          [&](const cert::StrictWindow& s) { return check_window(v, s.window, true); },
          [&](const cert::DoublingWindow& d) {
            if (d.window < 2 * v.coefficients.length()) return fail("doubling window ends before 2L");
            return check_window(v, d.window, false);
          },
          [&](const cert::HorizonExhausted& h) {
            if (!v.is_unknown()) return fail("horizon certificate on a definite verdict");
            if (h.horizon < 2 * v.coefficients.length() - 1) return fail("horizon below 2L-1");
            const Verdict again = check_completeness(v.coefficients, h.horizon);
            if (!again.is_unknown()) {
              return fail("the horizon actually yields a " + std::string(to_string(again.kind)) +
                          " verdict");
            }
            return ok();
          },
          [&](const cert::RootTriage& r) {
            const Verdict again = triage(v.coefficients);
            if (again.kind != v.kind || again.conjectural != v.conjectural ||
                certificate_tag(again.certificate) != "root:" + r.path) {
              return fail("triage re-run gives " + certificate_tag(again.certificate));
            }
            return ok();
          },
          [&](const cert::FamilyRule& f) {
            const std::size_t L = v.coefficients.length();
            if (f.rule == "2l1-conjecture") {
              if (!v.is_complete() || !v.conjectural) return fail("2L-1 rule must be conjectural complete");
              const GapTrace trace = gap_trace(generate_terms(v.coefficients, 2 * L - 1));
              for (std::size_t n = 1; n <= trace.size(); ++n) {
                if (sgn(trace.gap(n)) < 0) return fail("B_" + std::to_string(n) + " < 0");
              }
              return ok();
            }
            const auto shape = match_family(v.coefficients, f.rule);
            if (!shape) return fail("coefficients do not belong to family " + f.rule);
            const Verdict again = classify_family(*shape, v.coefficients.last());
            if (again.kind != v.kind || again.conjectural != v.conjectural) {
              return fail("family rule re-classification disagrees");
            }
            return ok();
          },
      },
      v.certificate);
}

}  // namespace plrs
