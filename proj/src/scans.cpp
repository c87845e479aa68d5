#include "plrs/scans.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "plrs/error.hpp"
#include "plrs/oracle.hpp"
#include "plrs/parallel.hpp"

namespace plrs {

namespace {

std::optional<Verdict> try_oracle(const Coefficients& c) {
  try {
    return oracle_verdict(c, std::max<std::size_t>(4 * c.length(), 2 * c.length() - 1));
  } catch (const Error& e) {
    if (e.code() != Errc::BudgetExceeded) throw;
    return std::nullopt;
  }
}

void enumerate(std::size_t length, std::uint64_t cap, std::uint64_t sum_cap,
               std::vector<Coefficients>& out) {
  std::vector<std::uint64_t> current(length, 0);
  std::function<void(std::size_t, std::uint64_t)> walk = [&](std::size_t i, std::uint64_t sum) {
    if (i == length) {
      out.push_back(Coefficients::from_unsigned(current));
      return;
    }
    const bool edge = i == 0 || i + 1 == length;
    for (std::uint64_t v = edge ? 1 : 0; v <= cap && sum + v <= sum_cap; ++v) {
      current[i] = v;
      walk(i + 1, sum + v);
    }
  };
  walk(0, 0);
}

}  // namespace

std::vector<Coefficients> enumerate_space(std::size_t length, std::uint64_t cap) {
  if (length < 1 || cap < 1) throw Error(Errc::InvalidArgument, "need L >= 1 and cap >= 1");
  std::vector<Coefficients> out;
  enumerate(length, cap, std::numeric_limits<std::uint64_t>::max() / 2, out);
  return out;
}

std::vector<Coefficients> enumerate_space_upto(std::size_t max_length, std::uint64_t cap) {
  std::vector<Coefficients> out;
  for (std::size_t L = 1; L <= max_length; ++L) {
    auto part = enumerate_space(L, cap);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Scan2l1Report scan_2l1(std::size_t length, std::uint64_t cap, std::size_t window, unsigned jobs,
                       const CheckOptions& options) {
  Scan2l1Report report;
  report.length = length;
  report.cap = cap;
  report.window = window ? window : 2 * length - 1;
  const auto space = enumerate_space(length, cap);
  report.scanned = space.size();

  struct Outcome {
    bool passes = false;
    std::optional<ScanEntry> entry;
    bool unresolved = false;
  };
  const auto outcomes = parallel_map(space.size(), jobs, [&](std::size_t i) {
    const Coefficients& c = space[i];
    Outcome out;
    const auto fail = first_failure_index(c, report.window);
    if (fail) return out;
    out.passes = true;
    Verdict v = decide(c, options);
    if (v.is_unknown()) {
      out.unresolved = true;
    } else if (v.is_incomplete()) {
      out.entry = ScanEntry{c, std::move(v), try_oracle(c)};
    }
    return out;
  });

  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].passes) ++report.passing_window;
    if (outcomes[i].unresolved) report.unresolved.push_back(space[i]);
    if (outcomes[i].entry) report.counterexamples.push_back(*outcomes[i].entry);
  }
  return report;
}

MinRootReport min_root_frontier(std::size_t length, std::uint64_t sum_cap, unsigned jobs,
                                const CheckOptions& options) {
  MinRootReport report{.length = length, .sum_cap = sum_cap, .lambda = lambda_threshold(length)};
  std::vector<Coefficients> space;
  enumerate(length, sum_cap, sum_cap, space);
  report.scanned = space.size();

  struct Outcome {
    bool incomplete = false;
    bool confirmed = false;
    bool unresolved = false;
  };
  const auto outcomes = parallel_map(space.size(), jobs, [&](std::size_t i) {
    Outcome out;
    const auto oracle = try_oracle(space[i]);
    if (oracle && oracle->is_incomplete()) {
      out.incomplete = out.confirmed = true;
      return out;
    }
    const Verdict v = decide(space[i], options);
    out.incomplete = v.is_incomplete();
    out.unresolved = v.is_unknown();
    return out;
  });

  // Deterministic reduction: strict improvement only, so ties keep the
  // lexicographically first vector.
  for (std::size_t i = 0; i < space.size(); ++i) {
    const auto& o = outcomes[i];
    report.unresolved += o.unresolved;
    if (!o.incomplete) continue;
    ++report.incomplete;
    report.oracle_confirmed += o.confirmed;
    if (!report.frontier || compare_principal_roots(space[i], *report.frontier) < 0) {
      report.frontier = space[i];
    }
  }
  if (report.frontier) {
    report.frontier_root = principal_root(*report.frontier);
    report.frontier_vs_lambda =
        compare_principal_roots(*report.frontier, lambda_coefficients(length));
    report.margin = report.frontier_root->approx() - report.lambda.lambda.approx();
  }
  return report;
}

std::vector<FamilyRow> family_table(const std::vector<FamilyShape>& shapes, unsigned jobs,
                                    const CheckOptions& options) {
  return parallel_map(shapes.size(), jobs, [&](std::size_t i) {
    FamilyRow row{shapes[i], std::nullopt, search_max_n(shapes[i], options), ""};
    try {
      row.bound = family_bound(shapes[i]);
    } catch (const Error& e) {
      if (e.code() != Errc::OutOfProvenRange && e.code() != Errc::ShapeViolation) throw;
    }
    if (!row.search.resolved) {
      row.status = "unresolved";
    } else if (!row.bound) {
      row.status = "no_formula";
    } else {
      row.status = row.bound->max_n == row.search.max_n ? "match" : "mismatch";
    }
    return row;
  });
}

}  // namespace plrs
