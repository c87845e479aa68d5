#include "plrs/oracle.hpp"

#include "plrs/brown.hpp"
#include "plrs/error.hpp"

namespace plrs {

namespace {

std::uint64_t to_u64(const BigInt& value, std::size_t budget_bits) {
  if (!value.fits_ulong_p() || value.get_ui() >= budget_bits) {
    throw Error(Errc::BudgetExceeded,
                "term " + value.get_str() + " exceeds the " + std::to_string(budget_bits) +
                    "-bit budget");
  }
  return value.get_ui();
}

}  // namespace

void ReachableSet::add(std::uint64_t term, std::size_t budget_bits) {
  const std::uint64_t new_bound = bound() + term;
  if (new_bound < bound() || new_bound >= budget_bits) {
    throw Error(Errc::BudgetExceeded, "subset-sum bound " + std::to_string(new_bound) +
                                          " exceeds the " + std::to_string(budget_bits) +
                                          "-bit budget");
  }
  bits_.resize(new_bound + 1);
  bits_ |= bits_ << term;
}

std::optional<std::uint64_t> ReachableSet::smallest_missing() const {
  auto holes = ~bits_;
  holes.reset(0);
  const auto pos = holes.find_first();
  if (pos == boost::dynamic_bitset<std::uint64_t>::npos) return std::nullopt;
  return pos;
}

std::vector<std::uint64_t> ReachableSet::to_vector() const {
  std::vector<std::uint64_t> out;
  for (auto pos = bits_.find_first(); pos != boost::dynamic_bitset<std::uint64_t>::npos;
       pos = bits_.find_next(pos)) {
    out.push_back(pos);
  }
  return out;
}

ReachableSet reachable_sums(const TermSequence& t, std::size_t budget_bits) {
  ReachableSet set;
  for (const auto& h : t.terms()) set.add(to_u64(h, budget_bits), budget_bits);
  return set;
}

RepresentabilityReport representability(const Coefficients& c, std::size_t prefix_length,
                                        std::size_t budget_bits) {
  if (prefix_length < 1) throw Error(Errc::InvalidArgument, "prefix_length must be positive");
  const TermSequence t = generate_terms(c, prefix_length + 1);
  const ReachableSet set = reachable_sums(t.extended(prefix_length), budget_bits);
  RepresentabilityReport report{prefix_length, set.bound(), set.smallest_missing(), std::nullopt};
  if (report.smallest_missing && BigInt(*report.smallest_missing) < t.term(prefix_length + 1)) {
    report.permanently_missing = report.smallest_missing;
  }
  return report;
}

std::optional<std::uint64_t> smallest_unrepresentable(const Coefficients& c,
                                                      std::size_t prefix_length,
                                                      std::size_t budget_bits) {
  if (prefix_length < 1) throw Error(Errc::InvalidArgument, "prefix_length must be positive");
  return reachable_sums(generate_terms(c, prefix_length), budget_bits).smallest_missing();
}

OracleResult oracle_check(const Coefficients& c, std::size_t max_prefix, std::size_t budget_bits) {
  const std::size_t L = c.length();
  if (max_prefix < 2 * L - 1) {
    throw Error(Errc::HorizonTooSmall, "max_prefix " + std::to_string(max_prefix) +
                                           " < 2L-1 = " + std::to_string(2 * L - 1));
  }
  const TermSequence t = generate_terms(c, max_prefix + 1);
  ReachableSet set;
  RepresentabilityReport report;
  bool interval_everywhere = true;
  for (std::size_t p = 1; p <= max_prefix; ++p) {
    set.add(to_u64(t.term(p), budget_bits), budget_bits);
    report = {p, set.bound(), set.smallest_missing(), std::nullopt};
    const BigInt& next = t.term(p + 1);
    if (report.smallest_missing && BigInt(*report.smallest_missing) < next) {
      report.permanently_missing = report.smallest_missing;
      // The witness lies below H_p when it is the first hole ever seen, so
      // B_p = witness - H_p < 0 without touching the gap sums.
      const BigInt witness(*report.smallest_missing);
      Verdict v{c, VerdictKind::Incomplete,
                cert::Failure{p, witness - t.term(p), witness}, false, p};
      return {std::move(v), report};
    }
    if (report.smallest_missing || next > BigInt(set.bound()) + 1) interval_everywhere = false;
  }

  if (interval_everywhere) {
    Verdict tail = decide(c);
    if (tail.is_complete() && !tail.conjectural) {
      tail.horizon_used = std::max(tail.horizon_used, max_prefix);
      return {std::move(tail), report};
    }
  }
  return {Verdict{c, VerdictKind::Unknown, cert::HorizonExhausted{max_prefix}, false, max_prefix},
          report};
}

}  // namespace plrs
