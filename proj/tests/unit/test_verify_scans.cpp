#include <doctest.h>

#include "plrs/analytic.hpp"
#include "plrs/brown.hpp"
#include "plrs/error.hpp"
#include "plrs/families.hpp"
#include "plrs/scans.hpp"
#include "plrs/verify.hpp"

using namespace plrs;

namespace {

Coefficients co(std::initializer_list<std::int64_t> v) { return Coefficients::validate(v); }

}  // namespace

TEST_CASE("verdict JSON follows the documented field names") {
  const auto v = check_completeness(co({1, 3}), 10);
  const auto j = to_json(v);
  CHECK(j["coefficients"] == nlohmann::json::array({1, 3}));
  CHECK(j["kind"] == "incomplete");
  CHECK(j["certificate"] == "failure");
  CHECK(j["index"] == 3);
  CHECK(j["conjectural"] == false);
  CHECK(j["horizon_used"] == 10);

  const auto f = to_json(classify_family(family::OneZeros{5}, 14));
  CHECK(f["certificate"] == "family:one-zeros");
  CHECK(f["index"].is_null());
  CHECK(f["kind"] == "complete");
  CHECK(to_json(triage(co({1, 1})))["certificate"] == "root:below_lambda");
  CHECK(to_json(check_completeness(co({1, 1, 1, 1, 1, 1, 2}), 13))["certificate"] == "horizon");
}

TEST_CASE("every engine verdict round-trips through JSON and re-verifies") {
  for (const auto& c : enumerate_space_upto(4, 3)) {
    for (const auto& v : {decide(c), check_completeness(c, 2 * c.length() - 1),
                          check_completeness(c, 2 * c.length() - 1, true)}) {
      const auto back = verdict_from_json(nlohmann::json::parse(to_json(v).dump()));
      CHECK(back.coefficients == v.coefficients);
      CHECK(back.kind == v.kind);
      CHECK(certificate_tag(back.certificate) == certificate_tag(v.certificate));
      CHECK(certificate_index(back.certificate) == certificate_index(v.certificate));
      const auto result = verify_verdict(back);
      CHECK_MESSAGE(result.valid, c.to_string() << ": " << result.reason);
    }
    if (c.length() >= 2) CHECK(verify_verdict(triage(c)).valid);
  }
}

TEST_CASE("family and triage verdicts verify") {
  CHECK(verify_verdict(classify_family(family::OneZeros{5}, 14)).valid);
  CHECK(verify_verdict(classify_family(family::OnesZeros{3, 3}, 14)).valid);
  CHECK(verify_verdict(classify_family(family::TwoOnesZeros{3}, 2)).valid);
  CHECK(verify_verdict(classify_family(family::OneZerosOnes{8, 2}, 17)).valid);
  CHECK(verify_verdict(triage(co({1, 1, 1, 0, 4}))).valid);
}

TEST_CASE("tampered verdicts are rejected") {
  auto wrong_index = check_completeness(co({1, 0, 4}), 20);
  std::get<cert::Failure>(wrong_index.certificate).index = 6;
  CHECK_FALSE(verify_verdict(wrong_index).valid);

  auto late_index = check_completeness(co({1, 3}), 20);
  std::get<cert::Failure>(late_index.certificate).index = 4;
  CHECK_FALSE(verify_verdict(late_index).valid);

  auto flipped = decide(co({1, 3}));
  flipped.kind = VerdictKind::Complete;
  CHECK_FALSE(verify_verdict(flipped).valid);

  Verdict strict{co({1, 1, 2}), VerdictKind::Complete, cert::StrictWindow{5}, false, 5};
  CHECK_FALSE(verify_verdict(strict).valid);

  Verdict early_doubling{co({1, 1, 2}), VerdictKind::Complete, cert::DoublingWindow{5}, false, 5};
  CHECK_FALSE(verify_verdict(early_doubling).valid);

  Verdict false_family{co({1, 0, 0, 0, 0, 0, 15}), VerdictKind::Complete,
                       cert::FamilyRule{"one-zeros"}, false, 0};
  CHECK_FALSE(verify_verdict(false_family).valid);

  Verdict wrong_family{co({1, 2, 5}), VerdictKind::Complete, cert::FamilyRule{"one-zeros"}, false, 0};
  CHECK_FALSE(verify_verdict(wrong_family).valid);

  Verdict false_horizon{co({1, 3}), VerdictKind::Unknown, cert::HorizonExhausted{10}, false, 10};
  CHECK_FALSE(verify_verdict(false_horizon).valid);

  Verdict false_triage{co({1, 3}), VerdictKind::Complete, cert::RootTriage{"below_lambda"}, true, 0};
  CHECK_FALSE(verify_verdict(false_triage).valid);
}

TEST_CASE("malformed JSON verdicts raise InvalidArgument") {
  for (const char* text :
       {R"({"kind":"complete"})",
        R"({"coefficients":[1],"kind":"maybe","certificate":"failure","index":1,"conjectural":false,"horizon_used":1})",
        R"({"coefficients":[1],"kind":"complete","certificate":"nonsense","index":1,"conjectural":false,"horizon_used":1})"}) {
    try {
      (void)verdict_from_json(nlohmann::json::parse(text));
      FAIL("accepted " << text);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::InvalidArgument);
    }
  }
}

TEST_CASE("invalid coefficients in JSON keep their validation error") {
  const auto j = nlohmann::json::parse(
      R"({"coefficients":[0,1],"kind":"complete","certificate":"failure","index":1,"conjectural":false,"horizon_used":1})");
  try {
    (void)verdict_from_json(j);
    FAIL("accepted a leading zero");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LeadingZero);
  }
}

TEST_CASE("match_family") {
  CHECK(match_family(co({1, 0, 0, 7}), "one-zeros").has_value());
  CHECK_FALSE(match_family(co({1, 1, 0, 7}), "one-zeros").has_value());
  const auto oz = match_family(co({1, 1, 0, 0, 9}), "ones-zeros");
  REQUIRE(oz.has_value());
  CHECK(std::get<family::OnesZeros>(*oz).g == 2);
  CHECK(std::get<family::OnesZeros>(*oz).k == 2);
  CHECK(match_family(co({1, 0, 0, 1, 1, 4}), "one-zeros-ones").has_value());
  CHECK_FALSE(match_family(co({1, 3}), "no-such-rule").has_value());
}

TEST_CASE("enumerate_space") {
  CHECK(enumerate_space(1, 4).size() == 4);
  CHECK(enumerate_space(2, 4).size() == 16);
  CHECK(enumerate_space(3, 4).size() == 80);
  CHECK(enumerate_space_upto(4, 4).size() == 500);
  const auto s = enumerate_space(3, 3);
  CHECK(std::is_sorted(s.begin(), s.end()));
  CHECK_THROWS_AS((void)enumerate_space(2, 0), Error);
}

TEST_CASE("2L-1 scan finds nothing while the 2L-2 control does") {
  for (auto [L, cap] : {std::pair<std::size_t, std::uint64_t>{2, 3}, {2, 4}, {3, 3}, {3, 4}}) {
    const auto r = scan_2l1(L, cap);
    CHECK(r.window == 2 * L - 1);
    CHECK(r.scanned == enumerate_space(L, cap).size());
    CHECK(r.counterexamples.empty());
    CHECK(r.unresolved.empty());
  }
  const auto control = scan_2l1(3, 4, 4);
  REQUIRE(control.counterexamples.size() == 1);
  CHECK(control.counterexamples.front().coefficients == co({1, 0, 4}));
  const auto control2 = scan_2l1(2, 4, 2);
  CHECK(control2.counterexamples.size() == 2);
  CHECK(scan_2l1(3, 3, 4).counterexamples.empty());
}

TEST_CASE("min-root frontier") {
  const auto r2 = min_root_frontier(2, 4);
  REQUIRE(r2.frontier.has_value());
  CHECK(*r2.frontier == co({1, 3}));
  CHECK(r2.frontier_vs_lambda == std::strong_ordering::equal);
  CHECK_FALSE(r2.counterexample());
  const auto r3 = min_root_frontier(3, 6);
  REQUIRE(r3.frontier.has_value());
  CHECK(r3.frontier_vs_lambda != std::strong_ordering::less);
  const auto r4 = min_root_frontier(4, 8);
  REQUIRE(r4.frontier.has_value());
  CHECK_FALSE(r4.counterexample());
}

TEST_CASE("parallel scans are deterministic") {
  const auto a = scan_2l1(3, 4, 4, 1);
  const auto b = scan_2l1(3, 4, 4, 3);
  CHECK(a.passing_window == b.passing_window);
  REQUIRE(a.counterexamples.size() == b.counterexamples.size());
  for (std::size_t i = 0; i < a.counterexamples.size(); ++i) {
    CHECK(a.counterexamples[i].coefficients == b.counterexamples[i].coefficients);
  }
  const auto m1 = min_root_frontier(4, 7, 1);
  const auto m3 = min_root_frontier(4, 7, 4);
  CHECK(m1.frontier == m3.frontier);
  CHECK(m1.incomplete == m3.incomplete);
}

TEST_CASE("family_table flags formulas, gaps and mismatches") {
  std::vector<FamilyShape> shapes;
  for (std::uint32_t k = 0; k <= 6; ++k) shapes.push_back(family::OneZeros{k});
  shapes.push_back(family::OnesZeros{2, 3});
  shapes.push_back(family::OnesZeros{3, 3});
  shapes.push_back(family::TwoOnesZeros{4});
  const auto rows = family_table(shapes, 2);
  REQUIRE(rows.size() == shapes.size());
  const std::uint64_t expected[] = {2, 3, 5, 8, 11, 14, 18};
  for (std::size_t k = 0; k <= 6; ++k) {
    CHECK(rows[k].status == "match");
    CHECK(rows[k].search.max_n == expected[k]);
  }
  CHECK(rows[7].status == "no_formula");
  CHECK(rows[7].search.max_n == 11);
  CHECK(rows[8].status == "match");
  CHECK(rows[9].status == "match");
  CHECK_FALSE(rows[9].bound->proven);
}
