#include "plrs/analytic.hpp"

#include <cassert>
#include <cmath>
#include <functional>

#include "plrs/brown.hpp"
#include "plrs/error.hpp"
#include "plrs/oracle.hpp"

namespace plrs {

// ---------------------------------------------------------------------------
// RootBracket

Rational RootBracket::lo() const {
  Rational out(numerator_);
  mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), shift_);
  return out;
}

Rational RootBracket::hi() const {
  if (exact_) return lo();
  Rational out(numerator_ + 1);
  mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), shift_);
  return out;
}

Rational RootBracket::width() const { return hi() - lo(); }

std::optional<std::uint64_t> RootBracket::exact_root() const {
  if (!exact_) return std::nullopt;
  return numerator_.get_ui();
}

double RootBracket::approx() const {
  if (exact_) return numerator_.get_d();
  Rational mid(2 * numerator_ + 1);
  mpq_div_2exp(mid.get_mpq_t(), mid.get_mpq_t(), shift_ + 1);
  return mid.get_d();
}

// ---------------------------------------------------------------------------
// CharPoly

Rational CharPoly::eval(const Rational& t) const {
  Rational v = 1;
  for (auto c : coefficients_.values()) v = v * t - Rational(BigInt(c));
  return v;
}

int CharPoly::sign_at(const Rational& t) const { return sgn(eval(t)); }

int CharPoly::sign_at_dyadic(const BigInt& numerator, unsigned shift) const {
  // Horner on the homogenised form: V_i = V_{i-1} * a - c_i * 2^{s i}.
  BigInt v = 1;
  BigInt scale = 1;
  for (auto c : coefficients_.values()) {
    scale <<= shift;
    v *= numerator;
    if (c != 0) v -= scale * c;
  }
  return sgn(v);
}

RootBracket CharPoly::isolate() const {
  // p(1) = 1 - sum c_i <= 0 and p(1 + max c_i) >= 1.
  BigInt lo = 1;
  BigInt hi = BigInt(coefficients_.max()) + 1;
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (sign_at_dyadic(mid, 0) > 0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  RootBracket b;
  if (sign_at_dyadic(lo, 0) == 0) {
    b.numerator_ = lo;
    b.exact_ = true;
  } else if (sign_at_dyadic(hi, 0) == 0) {
    b.numerator_ = hi;
    b.exact_ = true;
  } else {
    b.numerator_ = lo;
  }
  return b;
}

void CharPoly::bisect(RootBracket& b) const {
  if (b.exact_) return;
  BigInt mid = 2 * b.numerator_ + 1;
  const int s = sign_at_dyadic(mid, b.shift_ + 1);
  // mid is not an integer, so it cannot be a root of a monic integer polynomial.
  assert(s != 0);
  b.numerator_ = s > 0 ? mid - 1 : mid;
  b.shift_ += 1;
}

void CharPoly::refine_to_bits(RootBracket& b, unsigned bits) const {
  while (!b.exact_ && b.shift_ < bits) bisect(b);
}

RootBracket CharPoly::root(double tol) const {
  if (!(tol > 0)) throw Error(Errc::InvalidArgument, "tolerance must be positive");
  const unsigned bits = tol >= 1 ? 0u : static_cast<unsigned>(std::ceil(-std::log2(tol)));
  RootBracket b = isolate();
  refine_to_bits(b, bits);
  return b;
}

Rational char_poly_eval(const Coefficients& c, const Rational& t) {
  if (sgn(t) < 0) throw Error(Errc::InvalidArgument, "evaluation point must be non-negative");
  return CharPoly(c).eval(t);
}

RootBracket principal_root(const Coefficients& c, double tol) { return CharPoly(c).root(tol); }

// ---------------------------------------------------------------------------
// Exact comparisons

namespace {

std::optional<std::strong_ordering> order_by_refinement(const CharPoly& pa, RootBracket& a,
                                                        const CharPoly& pb, RootBracket& b,
                                                        unsigned max_bits) {
  for (;;) {
    if (a.is_exact() && b.is_exact()) return *a.exact_root() <=> *b.exact_root();
    if (a.hi() <= b.lo()) return std::strong_ordering::less;
    if (b.hi() <= a.lo()) return std::strong_ordering::greater;
    const bool can_a = !a.is_exact() && a.precision_bits() < max_bits;
    const bool can_b = !b.is_exact() && b.precision_bits() < max_bits;
    if (!can_a && !can_b) return std::nullopt;
    if (can_a && (!can_b || a.precision_bits() <= b.precision_bits())) {
      pa.bisect(a);
    } else {
      pb.bisect(b);
    }
  }
}

using Poly = std::vector<Rational>;  // highest degree first

Poly to_poly(const Coefficients& c) {
  Poly p{Rational(1)};
  for (auto v : c.values()) p.emplace_back(-Rational(BigInt(v)));
  return p;
}

void trim(Poly& p) {
  std::size_t lead = 0;
  while (lead < p.size() && p[lead] == 0) ++lead;
  p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(lead));
}

Poly remainder(Poly a, const Poly& b) {
  while (a.size() >= b.size()) {
    const Rational factor = a.front() / b.front();
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= factor * b[i];
    a.erase(a.begin());
    trim(a);
  }
  return a;
}

// The principal roots coincide iff gcd(p_a, p_b) has a positive root. Each
// polynomial has exactly one positive root, simple, and a non-zero constant
// term, so that happens iff the monic gcd is negative at 0.
bool share_principal_root(const Coefficients& a, const Coefficients& b) {
  Poly x = to_poly(a), y = to_poly(b);
  while (!y.empty()) {
    Poly r = remainder(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.size() < 2) return false;
  return sgn(x.back() / x.front()) < 0;
}

// Decides 2r > q + s from bracket endpoints, refining the widest bracket.
std::optional<bool> certify_convex(const CharPoly& pq, RootBracket& q, const CharPoly& pr,
                                   RootBracket& r, const CharPoly& ps, RootBracket& s,
                                   unsigned max_bits) {
  for (;;) {
    if (2 * r.lo() - q.hi() - s.hi() > 0) return true;
    if (2 * r.hi() - q.lo() - s.lo() < 0) return false;
    RootBracket* widest = nullptr;
    const CharPoly* poly = nullptr;
    for (auto [b, p] : {std::pair{&q, &pq}, std::pair{&r, &pr}, std::pair{&s, &ps}}) {
      if (b->is_exact() || b->precision_bits() >= max_bits) continue;
      if (!widest || b->precision_bits() < widest->precision_bits()) {
        widest = b;
        poly = p;
      }
    }
    if (!widest) return std::nullopt;
    poly->bisect(*widest);
  }
}

Coefficients one_zeros_last(std::size_t length, std::uint64_t last) {
  std::vector<std::uint64_t> v(length, 0);
  v.front() = 1;
  v.back() = last;
  return Coefficients::from_unsigned(std::move(v));
}

}  // namespace

std::strong_ordering compare_principal_roots(const Coefficients& a, const Coefficients& b) {
  if (a == b) return std::strong_ordering::equal;
  const CharPoly pa(a), pb(b);
  RootBracket ra = pa.isolate(), rb = pb.isolate();
  if (auto o = order_by_refinement(pa, ra, pb, rb, 192)) return *o;
  if (share_principal_root(a, b)) return std::strong_ordering::equal;
  // Distinct roots always separate eventually.
  if (auto o = order_by_refinement(pa, ra, pb, rb, 1u << 16)) return *o;
  throw Error(Errc::CostCap, "could not separate principal roots of " + a.to_string() + " and " +
                                 b.to_string());
}

// ---------------------------------------------------------------------------
// Threshold

std::uint64_t lambda_n(std::size_t length) {
  const std::uint64_t L = length;
  return (L * (L + 1) + 3) / 4;
}

Coefficients lambda_coefficients(std::size_t length) {
  if (length < 2) throw Error(Errc::InvalidArgument, "lambda_L needs L >= 2");
  return one_zeros_last(length, lambda_n(length) + 1);
}

LambdaThreshold lambda_threshold(std::size_t length, double tol) {
  const Coefficients c = lambda_coefficients(length);
  return {length, lambda_n(length), principal_root(c, tol)};
}

Verdict triage(const Coefficients& c) {
  const CharPoly p(c);
  if (p.sign_at(Rational(2)) < 0) {
    return {c, VerdictKind::Incomplete, cert::RootTriage{"p2_negative"}, false, 0};
  }
  if (c.length() >= 2 && compare_principal_roots(c, lambda_coefficients(c.length())) < 0) {
    return {c, VerdictKind::Complete, cert::RootTriage{"below_lambda"}, true, 0};
  }
  return {c, VerdictKind::Unknown, cert::RootTriage{"indeterminate"}, false, 0};
}

// ---------------------------------------------------------------------------
// Enumerations

PlsMinimum min_root_in_pls(std::size_t length, std::uint64_t s) {
  if (length < 1 || s < 1) throw Error(Errc::InvalidArgument, "need L >= 1 and S >= 1");
  Coefficients c = length == 1 ? Coefficients::from_unsigned({s + 1}) : one_zeros_last(length, s);
  RootBracket r = principal_root(c);
  return {std::move(c), std::move(r)};
}

std::vector<Coefficients> enumerate_pls(std::size_t length, std::uint64_t s) {
  if (length < 1 || s < 1) throw Error(Errc::InvalidArgument, "need L >= 1 and S >= 1");
  constexpr std::size_t kCap = 1'000'000;
  std::vector<Coefficients> out;
  std::vector<std::uint64_t> current(length, 0);
  const std::uint64_t total = s + 1;
  std::function<void(std::size_t, std::uint64_t)> fill = [&](std::size_t i, std::uint64_t left) {
    if (i + 1 == length) {
      if (left == 0) return;
      current[i] = left;
      if (current.front() == 0) return;
      if (out.size() >= kCap) throw Error(Errc::CostCap, "P_{L,S} too large to enumerate");
      out.push_back(Coefficients::from_unsigned(current));
      return;
    }
    for (std::uint64_t v = (i == 0 ? 1 : 0); v < left; ++v) {
      current[i] = v;
      fill(i + 1, left - v);
    }
  };
  fill(0, total);
  return out;
}

ThresholdReport exact_threshold_search(std::size_t length) {
  if (length < 2) throw Error(Errc::InvalidArgument, "threshold search needs L >= 2");
  if (length > 5) throw Error(Errc::CostCap, "threshold search is limited to L <= 5");
  ThresholdReport report{.length = length, .lambda = lambda_threshold(length)};

  const std::uint64_t limit = std::uint64_t{1} << length;  // 2^L
  std::vector<std::uint64_t> current(length, 0);
  std::function<void(std::size_t, std::uint64_t)> walk = [&](std::size_t i, std::uint64_t weighted) {
    if (i == length) {
      if (current.back() == 0) return;
      const Coefficients c = Coefficients::from_unsigned(current);
      ++report.candidates;
      const Verdict v = decide(c);
      if (v.is_unknown()) {
        ++report.unresolved;
        return;
      }
      try {
        const Verdict o = oracle_verdict(c, 4 * length);
        if (!o.is_unknown() && o.kind != v.kind) ++report.oracle_disagreements;
      } catch (const Error& e) {
        if (e.code() != Errc::BudgetExceeded) throw;
      }
      if (!v.is_incomplete()) return;
      ++report.incomplete;
      if (!report.frontier || compare_principal_roots(c, *report.frontier) < 0) {
        report.frontier = c;
      }
      return;
    }
    const std::uint64_t weight = std::uint64_t{1} << (length - 1 - i);  // 2^{L-i} for c_{i+1}
    const std::uint64_t cap = std::uint64_t{1} << (i + 1);               // c_{i+1} <= 2^{i+1}
    for (std::uint64_t v = (i == 0 ? 1 : 0); v <= cap; ++v) {
      const std::uint64_t w = weighted + v * weight;
      if (w >= limit) break;  // p(2) > 0 needs sum c_i 2^{L-i} < 2^L
      current[i] = v;
      walk(i + 1, w);
    }
    current[i] = 0;
  };
  walk(0, 0);

  if (report.frontier) {
    report.frontier_root = principal_root(*report.frontier);
    report.frontier_vs_lambda =
        compare_principal_roots(*report.frontier, lambda_coefficients(length));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Root spacing

GapOrder root_order_gap(std::size_t length, std::uint64_t k) {
  if (length <= 2 || k < 1) throw Error(Errc::InvalidArgument, "need L > 2 and k > 0");
  const CharPoly pq(one_zeros_last(length, k));
  const CharPoly pr(one_zeros_last(length, k + 1));
  const CharPoly ps(one_zeros_last(length, k + 2));
  RootBracket q = pq.root(kDefaultRootTolerance);
  RootBracket r = pr.root(kDefaultRootTolerance);
  RootBracket s = ps.root(kDefaultRootTolerance);
  const auto certified = certify_convex(pq, q, pr, r, ps, s, 4096);
  return {r.approx() - q.approx(), s.approx() - r.approx(), certified.value_or(false)};
}

DensenessReport denseness_scan(std::size_t length, double epsilon, double tol) {
  if (length < 2 || !(epsilon > 0)) throw Error(Errc::InvalidArgument, "need L >= 2 and epsilon > 0");
  if (length > 22) throw Error(Errc::CostCap, "denseness scan is limited to L <= 22");

  DensenessReport report;
  report.length = length;
  report.epsilon = epsilon;
  const std::uint64_t first = lambda_n(length) + 1;
  const std::uint64_t last = std::uint64_t{1} << (length - 1);
  if (first > last) return report;

  std::vector<CharPoly> polys;
  for (std::uint64_t k = first; k <= last; ++k) {
    polys.emplace_back(one_zeros_last(length, k));
    report.roots.emplace_back(k, polys.back().root(tol));
  }

  auto& roots = report.roots;
  Rational worst_upper = 0;
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    const auto order = order_by_refinement(polys[i], roots[i].second, polys[i + 1],
                                           roots[i + 1].second, 4096);
    if (order != std::strong_ordering::less) report.strictly_increasing = false;
    report.max_gap = std::max(report.max_gap, roots[i + 1].second.approx() - roots[i].second.approx());
    worst_upper = std::max(worst_upper, Rational(roots[i + 1].second.hi() - roots[i].second.lo()));
  }
  for (std::size_t i = 0; i + 2 < roots.size(); ++i) {
    const auto convex = certify_convex(polys[i], roots[i].second, polys[i + 1], roots[i + 1].second,
                                       polys[i + 2], roots[i + 2].second, 4096);
    if (convex != true) report.gaps_decreasing = false;
  }

  report.covered_lo = roots.front().second.approx();
  report.covered_hi = roots.back().second.approx();
  report.ends_at_two = roots.back().second.exact_root() == std::optional<std::uint64_t>(2);
  report.max_gap_below_epsilon = worst_upper < Rational(epsilon);
  return report;
}

}  // namespace plrs
