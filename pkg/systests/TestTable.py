import functools
import logging
import os
import unittest
from unittest import TestCase

from Morse.MorseController import MorseController

# Degree thresholds with the default weights over the logarithmic base.
# (3, 5) is 68: its largest real root is about 67.32, so P(67) < 0 < P(68).
LOG_THRESHOLDS = {
    (2, 2): 15, (2, 3): 14, (2, 4): 14, (2, 5): 14,
    (3, 3): 75, (3, 4): 67, (3, 5): 68,
    (4, 4): 306, (4, 5): 280,
    (5, 5): 1154,
}

# Raising the order never raises the threshold, apart from these steps.
ORDER_STEP_RISES = {(3, 5): 1}

LOG_POLYNOMIALS = {
    (2, 2): [0, -378, -153, 12],
    (3, 3): [0, -948279600, -535215528, -17302968, 333162],
    (3, 5): [
        0, -932767072844075779968, -499176117299761437888,
        -15358014975447538560, 341303724582213312
    ],
}

COMPACT_THRESHOLDS = {(2, 2): 18}

SLOW = os.getenv("JETBOUND_SLOW_TESTS", "0") == "1"


@functools.lru_cache(maxsize=None)
def log_report(n, k):
    return MorseController(n=n, k=k, geometry="log").run()


class TestTable(TestCase):
    def setUp(self):
        logging.disable(logging.CRITICAL)

    def tearDown(self):
        logging.disable(logging.NOTSET)

    def check_cells(self, n):
        for (dim, order), expected in sorted(LOG_THRESHOLDS.items()):
            if dim != n:
                continue
            report = log_report(dim, order)
            cell = "cell ({}, {})".format(dim, order)
            self.assertGreater(report.leading_coeff, 0)
            self.assertEqual(report.threshold, expected, cell)
            self.assertLessEqual(report.morse_poly(expected - 1), 0, cell)
            self.assertGreater(report.morse_poly(expected), 0, cell)

    def test_tb_dimension_two(self):
        self.check_cells(2)

    def test_tb_dimension_three(self):
        self.check_cells(3)

    def test_tb_dimension_four(self):
        self.check_cells(4)

    @unittest.skipUnless(SLOW, "set JETBOUND_SLOW_TESTS=1 to run the (5, 5) cell")
    def test_tb_dimension_five(self):
        self.check_cells(5)

    def test_tb_monotone_in_order(self):
        for n in (2, 3, 4):
            orders = sorted(k for dim, k in LOG_THRESHOLDS if dim == n)
            thresholds = [log_report(n, k).threshold for k in orders]
            for k, previous, current in zip(orders[1:], thresholds, thresholds[1:]):
                self.assertLessEqual(
                    current - previous,
                    ORDER_STEP_RISES.get((n, k), 0),
                    "({}, {}) -> ({}, {})".format(n, k - 1, n, k)
                )
            self.assertLessEqual(thresholds[-1], thresholds[0])

    def test_tb_pinned_polynomials(self):
        for (n, k), coefficients in sorted(LOG_POLYNOMIALS.items()):
            self.assertEqual(log_report(n, k).morse_poly.coefficients, coefficients, "({}, {})".format(n, k))

    def test_tb_compact_thresholds(self):
        for n in (2, 3):
            report = MorseController(n=n, k=n, geometry="compact").run()
            self.assertGreater(report.leading_coeff, 0)
            self.assertGreaterEqual(report.threshold, 1)
            self.assertLessEqual(report.morse_poly(report.threshold - 1), 0)
            self.assertGreater(report.morse_poly(report.threshold), 0)
            if (n, n) in COMPACT_THRESHOLDS:
                self.assertEqual(report.threshold, COMPACT_THRESHOLDS[(n, n)])

    def test_tb_strategies_agree(self):
        for n, k in ((2, 2), (2, 4), (3, 3)):
            listing = MorseController(n=n, k=k, geometry="log", strategy="listing")
            reduced = MorseController(n=n, k=k, geometry="log")
            self.assertEqual(listing.integrated_class(), reduced.integrated_class(), "({}, {})".format(n, k))

    def test_tb_scaling(self):
        for n in (2, 3):
            base = log_report(n, n)
            doubled = MorseController(n=n, k=n, geometry="log", weights=base.weights.scaled(2)).run()
            self.assertEqual(doubled.threshold, base.threshold)

    def test_tb_threshold_is_minimal(self):
        for n, k in ((2, 2), (2, 3), (3, 3)):
            P = log_report(n, k).morse_poly
            threshold = log_report(n, k).threshold
            self.assertLessEqual(P(threshold - 1), 0)
            for d in range(threshold, threshold + 200):
                self.assertGreater(P(d), 0)
