#include <doctest.h>

#include <cmath>
#include <random>

#include "naive.hpp"
#include "plrs/analytic.hpp"
#include "plrs/brown.hpp"
#include "plrs/error.hpp"
#include "plrs/oracle.hpp"
#include "plrs/scans.hpp"

using namespace plrs;

namespace {

Coefficients co(std::initializer_list<std::int64_t> v) { return Coefficients::validate(v); }

Coefficients from(std::vector<std::uint64_t> v) { return Coefficients::from_unsigned(std::move(v)); }

std::vector<std::uint64_t> raw(const Coefficients& c) { return {c.values().begin(), c.values().end()}; }

void check_certified(const Coefficients& c, const RootBracket& b) {
  const CharPoly p(c);
  if (b.is_exact()) {
    CHECK(p.sign_at(Rational(static_cast<unsigned long>(*b.exact_root()))) == 0);
    return;
  }
  CHECK(b.lo() < b.hi());
  CHECK(p.sign_at(b.lo()) < 0);
  CHECK(p.sign_at(b.hi()) > 0);
}

}  // namespace

TEST_CASE("char_poly_eval examples") {
  CHECK(char_poly_eval(co({1, 1, 1, 0, 4}), 2) == 0);
  CHECK(char_poly_eval(co({2}), 2) == 0);
  CHECK(char_poly_eval(co({1, 3}), 2) == -1);
  CHECK(char_poly_eval(co({1, 3}), Rational(1, 2)) == Rational(-13, 4));
  CHECK(char_poly_eval(co({1, 1}), 0) == -1);
}

TEST_CASE("principal_root examples") {
  const auto a = principal_root(co({2, 1}), 1e-9);
  CHECK(a.approx() == doctest::Approx(1 + std::sqrt(2.0)).epsilon(1e-9));
  CHECK(a.width() <= Rational(1, 1'000'000'000));
  CHECK(principal_root(co({1, 3}), 1e-9).approx() ==
        doctest::Approx((1 + std::sqrt(13.0)) / 2).epsilon(1e-9));
  CHECK(principal_root(co({3, 1}), 1e-9).approx() ==
        doctest::Approx((3 + std::sqrt(13.0)) / 2).epsilon(1e-9));
  CHECK(principal_root(co({2, 2}), 1e-9).approx() == doctest::Approx(1 + std::sqrt(3.0)).epsilon(1e-9));
  CHECK(principal_root(co({1, 1})).approx() == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-12));
}

TEST_CASE("[1,...,1,2] has the exact root 2") {
  for (std::size_t L = 1; L <= 12; ++L) {
    std::vector<std::uint64_t> v(L, 1);
    v.back() = 2;
    const auto r = principal_root(from(v));
    REQUIRE(r.is_exact());
    CHECK(*r.exact_root() == 2);
    CHECK(r.lo() == r.hi());
  }
}

TEST_CASE("brackets are certified and agree with floating bisection") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 300; ++trial) {
    const auto v = naive::random_coefficients(rng, 7, 9);
    const auto c = from(v);
    const auto b = principal_root(c, 1e-10);
    check_certified(c, b);
    if (!b.is_exact()) CHECK(b.width() <= Rational(BigInt(1), BigInt("10000000000")));
    CHECK(b.approx() == doctest::Approx(static_cast<double>(naive::root(v))).epsilon(1e-9));
    CHECK(b.lo() >= 1);
    CHECK(b.hi() <= 1 + c.max());
  }
}

TEST_CASE("compare_principal_roots handles ties exactly") {
  CHECK(compare_principal_roots(co({2}), co({1, 2})) == std::strong_ordering::equal);
  CHECK(compare_principal_roots(co({1, 1, 1, 0, 4}), co({1, 1, 2})) == std::strong_ordering::equal);
  CHECK(compare_principal_roots(co({1, 1}), co({2})) == std::strong_ordering::less);
  CHECK(compare_principal_roots(co({3, 1}), co({2, 2})) == std::strong_ordering::greater);
  // (x^2 - 2x - 1)(x^2 + 1) = x^4 - 2x^3 - 2x - 1
  CHECK(compare_principal_roots(co({2, 1}), co({2, 0, 2, 1})) == std::strong_ordering::equal);
  CHECK(compare_principal_roots(co({2, 0, 2, 1}), co({2, 0, 2, 2})) == std::strong_ordering::less);
}

TEST_CASE("lambda_threshold examples") {
  const auto l3 = lambda_threshold(3);
  CHECK(l3.n_l == 3);
  REQUIRE(l3.lambda.is_exact());
  CHECK(*l3.lambda.exact_root() == 2);
  const auto l2 = lambda_threshold(2);
  CHECK(l2.n_l == 2);
  CHECK(l2.lambda.approx() == doctest::Approx((1 + std::sqrt(13.0)) / 2).epsilon(1e-12));
  const auto l4 = lambda_threshold(4);
  CHECK(l4.n_l == 5);
  CHECK(l4.lambda.hi() < 2);
  CHECK(l4.lambda.approx() == doctest::Approx(1.88947).epsilon(1e-5));
  CHECK(lambda_coefficients(5) == co({1, 0, 0, 0, 9}));
  CHECK_THROWS_AS((void)lambda_threshold(1), Error);
}

TEST_CASE("triage examples") {
  const auto a = triage(co({1, 3}));
  CHECK(a.is_incomplete());
  CHECK_FALSE(a.conjectural);
  CHECK(certificate_tag(a.certificate) == "root:p2_negative");

  const auto b = triage(co({1, 1, 1, 0, 4}));
  CHECK(b.is_unknown());
  CHECK(certificate_tag(b.certificate) == "root:indeterminate");
  CHECK(decide(co({1, 1, 1, 0, 4})).is_incomplete());

  const auto c = triage(co({1, 1}));
  CHECK(c.is_complete());
  CHECK(c.conjectural);
  CHECK(certificate_tag(c.certificate) == "root:below_lambda");

  CHECK(triage(co({3})).is_incomplete());
  CHECK(triage(co({2})).is_unknown());
  CHECK(triage(co({1})).is_unknown());
}

TEST_CASE("triage never contradicts the oracle on L <= 4, c_i <= 4") {
  std::size_t resolved = 0, total = 0;
  for (const auto& c : enumerate_space_upto(4, 4)) {
    ++total;
    const auto t = triage(c);
    if (t.is_unknown()) continue;
    ++resolved;
    const auto truth = oracle_verdict(c, 4 * c.length());
    if (truth.is_unknown()) continue;
    CHECK_MESSAGE(t.kind == truth.kind, c.to_string());
  }
  CHECK(total == 500);
  CHECK(resolved == 488);
}

TEST_CASE("min_root_in_pls is minimal over the enumerated set") {
  CHECK(min_root_in_pls(2, 3).minimizer == co({1, 3}));
  CHECK(min_root_in_pls(2, 3).root.approx() == doctest::Approx(2.302776).epsilon(1e-6));
  CHECK(min_root_in_pls(3, 2).minimizer == co({1, 0, 2}));
  CHECK(min_root_in_pls(2, 1).minimizer == co({1, 1}));
  CHECK(enumerate_pls(2, 3).size() == 3);
  CHECK(enumerate_pls(2, 1) == std::vector<Coefficients>{co({1, 1})});
  for (std::size_t L = 1; L <= 5; ++L) {
    for (std::uint64_t s = 1; s <= 6; ++s) {
      const auto best = min_root_in_pls(L, s);
      for (const auto& c : enumerate_pls(L, s)) {
        CHECK(c.sum() == s + 1);
        CHECK_MESSAGE(compare_principal_roots(best.minimizer, c) <= 0, c.to_string());
        if (c != best.minimizer) {
          CHECK_MESSAGE(compare_principal_roots(best.minimizer, c) < 0, c.to_string());
        }
      }
    }
  }
}

TEST_CASE("exact_threshold_search") {
  const auto r2 = exact_threshold_search(2);
  CHECK(r2.candidates == 1);
  CHECK_FALSE(r2.frontier.has_value());
  CHECK(r2.lambda.lambda.lo() > 2);
  const auto r3 = exact_threshold_search(3);
  CHECK(r3.candidates == 4);
  CHECK_FALSE(r3.frontier.has_value());
  const auto r4 = exact_threshold_search(4);
  CHECK(r4.candidates == 20);
  REQUIRE(r4.frontier.has_value());
  CHECK(*r4.frontier == co({1, 0, 0, 6}));
  CHECK(r4.frontier_vs_lambda == std::strong_ordering::equal);
  CHECK(r4.oracle_disagreements == 0);
  CHECK(r4.unresolved == 0);
  CHECK_THROWS_AS((void)exact_threshold_search(6), Error);
}

TEST_CASE("root_order_gap") {
  for (auto [L, k] : {std::pair<std::size_t, std::uint64_t>{3, 3}, {4, 5}, {10, 30}, {3, 1}, {7, 200}}) {
    const auto g = root_order_gap(L, k);
    CHECK(g.certified);
    CHECK(g.gap1 > g.gap2);
    CHECK(g.gap2 > 0);
  }
  CHECK_THROWS_AS((void)root_order_gap(2, 3), Error);
  CHECK_THROWS_AS((void)root_order_gap(3, 0), Error);
}

TEST_CASE("denseness_scan") {
  const auto d8 = denseness_scan(8, 0.1);
  CHECK(d8.strictly_increasing);
  CHECK(d8.gaps_decreasing);
  CHECK(d8.ends_at_two);
  CHECK(d8.roots.front().first == lambda_n(8) + 1);
  CHECK(d8.roots.back().first == 128);
  CHECK(d8.roots.size() == 128 - lambda_n(8));

  const auto d12 = denseness_scan(12, 0.05);
  CHECK(d12.strictly_increasing);
  CHECK(d12.ends_at_two);
  CHECK(d12.max_gap_below_epsilon);
  CHECK(d12.max_gap < 0.05);
  CHECK(d12.covered_hi == 2.0);
  CHECK_THROWS_AS((void)denseness_scan(23, 0.1), Error);
}

TEST_CASE("appending a positive coefficient raises the root") {
  for (const auto& c : enumerate_space_upto(3, 3)) {
    for (std::int64_t m = 1; m <= 3; ++m) {
      auto v = raw(c);
      v.push_back(static_cast<std::uint64_t>(m));
      CHECK_MESSAGE(compare_principal_roots(from(v), c) > 0, c.to_string());
    }
  }
}

TEST_CASE("adding m to the last coefficient beats appending m") {
  for (const auto& c : enumerate_space_upto(3, 3)) {
    for (std::uint64_t m = 1; m <= 3; ++m) {
      auto bumped = raw(c);
      bumped.back() += m;
      auto appended = raw(c);
      appended.push_back(m);
      CHECK_MESSAGE(compare_principal_roots(from(bumped), from(appended)) > 0, c.to_string());
    }
  }
}

TEST_CASE("decreasing the last coefficient lowers the root") {
  for (const auto& c : enumerate_space_upto(3, 4)) {
    if (c.last() < 2) continue;
    auto v = raw(c);
    --v.back();
    CHECK(compare_principal_roots(from(v), c) < 0);
  }
}

TEST_CASE("lambda_L decreases and stays above 1 + (L+2)/(L^2+L+4)") {
  for (std::size_t L = 2; L <= 24; ++L) {
    CHECK_MESSAGE(compare_principal_roots(lambda_coefficients(L), lambda_coefficients(L + 1)) > 0,
                  "L = " << L);
    const auto l = static_cast<long>(L);
    const Rational t = 1 + Rational(l + 2, l * l + l + 4);
    CHECK_MESSAGE(CharPoly(lambda_coefficients(L)).sign_at(t) < 0, "L = " << L);
  }
}

TEST_CASE("lambda_L drops below 1.1 first at L = 110") {
  const Rational t(11, 10);
  std::size_t first = 0;
  for (std::size_t L = 2; L <= 200 && first == 0; ++L) {
    if (CharPoly(lambda_coefficients(L)).sign_at(t) > 0) first = L;
  }
  CHECK(first == 110);
}

TEST_CASE("term ratios converge to the principal root") {
  std::mt19937_64 rng(2718);
  int sampled = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto v = naive::random_coefficients(rng, 4, 5);
    // Keep c_1 >= 2 so the dominant root is well separated and the ratio
    // settles well before n = 200.
    if (v.front() < 2) continue;
    const auto c = from(v);
    const auto t = generate_terms(c, 201);
    const Rational ratio(t.term(201), t.term(200));
    const double r = principal_root(c).approx();
    CHECK(std::abs(ratio.get_d() - r) / r < 1e-6);
    ++sampled;
  }
  CHECK(sampled > 50);
}
