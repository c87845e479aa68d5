import unittest
from fractions import Fraction

import plrs


def naive_terms(c, n):
    h = []
    for m in range(n):
        if m < len(c):
            h.append(sum(c[i] * h[m - 1 - i] for i in range(m)) + 1)
        else:
            h.append(sum(c[i] * h[m - 1 - i] for i in range(len(c))))
    return h


class Terms(unittest.TestCase):
    def test_small_examples(self):
        self.assertEqual(plrs.generate_terms([1, 1], 6), [1, 2, 3, 5, 8, 13])
        self.assertEqual(plrs.generate_terms([1, 2], 4), [1, 2, 4, 8])
        self.assertEqual(plrs.generate_terms([1, 3], 5), [1, 2, 5, 11, 26])

    def test_against_naive(self):
        for c in ([2, 0, 1], [1, 0, 0, 5], [3, 1, 4, 1]):
            self.assertEqual(plrs.generate_terms(c, 30), naive_terms(c, 30))

    def test_big_integers(self):
        h = plrs.generate_terms([1, 2], 200)
        self.assertGreater(h[-1], 2**64)
        self.assertEqual(h, naive_terms([1, 2], 200))

    def test_invalid_vectors(self):
        for c, code in (([], "EmptyVector"), ([0, 1], "LeadingZero"), ([1, 0], "TrailingZero"),
                        ([1, -1, 1], "NegativeEntry")):
            with self.assertRaises(plrs.PlrsError) as ctx:
                plrs.generate_terms(c, 4)
            self.assertEqual(ctx.exception.code, code)
        self.assertTrue(issubclass(plrs.PlrsError, ValueError))


class Completeness(unittest.TestCase):
    def test_gap_trace(self):
        gaps, margins = plrs.gap_trace([1, 3], 4)
        h = naive_terms([1, 3], 4)
        self.assertEqual(gaps, [1 + sum(h[:i]) - h[i] for i in range(4)])
        self.assertEqual(margins, [2 * h[i] - h[i + 1] for i in range(3)])

    def test_verdicts(self):
        v = plrs.check_completeness([1, 3], 8)
        self.assertEqual(v["kind"], "incomplete")
        self.assertEqual(plrs.first_failure_index([1, 3], 8), 3)
        self.assertEqual(plrs.decide([1, 1])["kind"], "complete")
        self.assertEqual(plrs.decide([1, 1, 0, 4])["kind"], "incomplete")

    def test_verify_round_trip(self):
        for c in ([1, 3], [1, 1], [1, 0, 3]):
            v = plrs.decide(c)
            self.assertEqual(plrs.verify_verdict(v)[0], True)

    def test_oracle_agrees(self):
        self.assertEqual(plrs.smallest_unrepresentable([1, 3], 3), 4)
        self.assertEqual(plrs.reachable_sums([1, 1], 3), [0, 1, 2, 3, 4, 5, 6])
        for c in ([1, 1], [1, 3], [1, 0, 3], [2, 2], [1, 1, 0, 4]):
            self.assertEqual(plrs.oracle_verdict(c, 24)["kind"], plrs.decide(c)["kind"])

    def test_horizon_too_small(self):
        with self.assertRaises(plrs.PlrsError) as ctx:
            plrs.check_completeness([1, 1, 1], 4)
        self.assertEqual(ctx.exception.code, "HorizonTooSmall")


class Families(unittest.TestCase):
    def test_bounds(self):
        self.assertEqual(plrs.bound_one_zeros(1)["max_n"], 3)
        self.assertTrue(plrs.bound_one_zeros(3)["proven"])
        self.assertEqual(plrs.classify_family("one-zeros", 1, n=3)["kind"], "complete")
        self.assertEqual(plrs.classify_family("one-zeros", 1, n=4)["kind"], "incomplete")

    def test_search_matches_bound(self):
        for k in range(1, 5):
            self.assertEqual(plrs.search_max_n("one-zeros", k), (plrs.bound_one_zeros(k)["max_n"], True))

    def test_unknown_family(self):
        with self.assertRaises(plrs.PlrsError):
            plrs.classify_family("nope", 1)


class Transforms(unittest.TestCase):
    def test_records(self):
        r = plrs.append_coeff([1, 3], 2)
        self.assertEqual(r["output"], [1, 3, 2])
        self.assertEqual(plrs.decrease_last([1, 0, 3], 2)["output"], [1, 0, 2])
        self.assertEqual(plrs.merge_last_two([1, 2, 3])["output"], [1, 5])


class Analytic(unittest.TestCase):
    def test_char_poly(self):
        self.assertEqual(plrs.char_poly_eval([1, 1], 2), 1)
        self.assertEqual(plrs.char_poly_eval([1, 1], Fraction(1, 2)), Fraction(-5, 4))

    def test_roots(self):
        r = plrs.principal_root([1, 1])
        self.assertLess(r["lo"], r["hi"])
        self.assertAlmostEqual(r["approx"], (1 + 5 ** 0.5) / 2, places=9)
        self.assertIsNone(r["exact_root"])
        self.assertEqual(plrs.principal_root([1, 2])["exact_root"], 2)
        self.assertEqual(plrs.compare_principal_roots([1, 1], [1, 2]), -1)
        self.assertEqual(plrs.compare_principal_roots([2, 1], [2, 0, 2, 1]), 0)

    def test_lambda_and_triage(self):
        t = plrs.lambda_threshold(4)
        self.assertEqual(t["n_l"], 5)
        self.assertAlmostEqual(t["lambda"]["approx"], 1.88947, places=4)
        self.assertEqual(plrs.triage([3])["kind"], "incomplete")

    def test_scans(self):
        c, root = plrs.min_root_in_pls(3, 4)
        self.assertEqual(c, [1, 0, 4])
        g1, g2, certified = plrs.root_order_gap(4, 7)
        self.assertTrue(certified)
        self.assertGreater(g1, g2)
        d = plrs.denseness_scan(8, 0.05)
        self.assertTrue(d["strictly_increasing"])
        self.assertTrue(d["ends_at_two"])


if __name__ == "__main__":
    unittest.main()
