import logging
from unittest import TestCase

from Morse.LemmaSuite import LemmaResult, LemmaSuite, exponent_tuples


class TestLemmaSuite(TestCase):
    def setUp(self):
        logging.disable(logging.CRITICAL)

    def test_ls_bad_max_dim(self):
        with self.assertRaises(ValueError):
            LemmaSuite(max_dim=1)
        with self.assertRaises(ValueError):
            LemmaSuite(max_dim="3")

    def test_ls_unknown_check(self):
        with self.assertRaises(ValueError):
            LemmaSuite(checks=["first_chern", "riemann_roch"])

    def test_ls_exponent_tuples(self):
        self.assertEqual(exponent_tuples(2, 2), [(0, 2), (1, 1), (2, 0)])
        self.assertEqual(len(exponent_tuples(3, 4)), 15)
        self.assertTrue(all(sum(e) == 5 for e in exponent_tuples(3, 5)))

    def test_ls_dimension_two(self):
        suite = LemmaSuite(max_dim=2)
        results = suite.run()
        self.assertTrue(LemmaSuite.all_passed(results), [r for r in results if not r.passed])
        self.assertEqual({r.check for r in results}, set(LemmaSuite.CHECKS) - {"vanishing_twisted"})

    def test_ls_top_monomial(self):
        result = LemmaSuite().check_top_monomial(2)[0]
        self.assertTrue(result.passed)
        self.assertEqual(result.observed, 1)

    def test_ls_vanishing(self):
        results = LemmaSuite().check_vanishing(2)
        self.assertEqual(len(results), 1)
        self.assertTrue(results[0].passed)

    def test_ls_chern_identities(self):
        suite = LemmaSuite()
        for n in (2, 3, 4):
            self.assertTrue(LemmaSuite.all_passed(suite.check_chern_compact(n)))
            self.assertTrue(LemmaSuite.all_passed(suite.check_chern_log(n)))

    def test_ls_summary(self):
        results = [
            LemmaResult("scaling", 2, 2, "a", 1, 1, True),
            LemmaResult("first_chern", 3, 1, "b", 1, 2, False),
            LemmaResult("first_chern", 2, 1, "c", 1, 1, True),
            LemmaResult("first_chern", 2, 2, "d", 1, 1, True),
        ]
        rows = LemmaSuite.summary(results)
        self.assertEqual([(row["check"], row["dim"]) for row in rows],
                         [("first_chern", 2), ("first_chern", 3), ("scaling", 2)])
        self.assertEqual(rows[0]["cases"], 2)
        self.assertEqual(rows[1]["status"], "FAIL")
        self.assertFalse(LemmaSuite.all_passed(results))

    def tearDown(self):
        logging.disable(logging.NOTSET)
