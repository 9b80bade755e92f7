import logging
import random
from unittest import TestCase

from Geometry.EvaluatedClass import EvaluatedClass
from Morse.MorseController import degree_threshold, real_root_intervals


def P(*coefficients):
    return EvaluatedClass.from_coefficients(list(coefficients))


class TestThreshold(TestCase):
    def setUp(self):
        logging.disable(logging.CRITICAL)
        self.rng = random.Random(1154)

    def test_th_linear(self):
        self.assertEqual(degree_threshold(P(-3, 1)), 4)

    def test_th_positive_everywhere(self):
        self.assertEqual(degree_threshold(P(1, 0, 1)), 1)
        self.assertEqual(degree_threshold(P(25, -20, 4)), 1)

    def test_th_negative_leading(self):
        self.assertIsNone(degree_threshold(P(5, -1)))
        self.assertIsNone(degree_threshold(P()))

    def test_th_integer_root(self):
        self.assertEqual(degree_threshold(P(0, 0, -15, 1)), 16)
        self.assertEqual(degree_threshold(P(15, -8, 1)), 6)

    def test_th_constant(self):
        self.assertEqual(degree_threshold(P(7)), 1)
        self.assertIsNone(degree_threshold(P(-7)))

    def test_th_double_root(self):
        # (d - 10)^2 (d - 3): zero at 10, positive just above and below it.
        self.assertEqual(degree_threshold(P(-300, 160, -23, 1)), 11)

    def test_th_large_constant(self):
        self.assertEqual(degree_threshold(P(10 ** 30, 1)), 1)
        self.assertEqual(degree_threshold(P(-10 ** 30, 1)), 10 ** 30 + 1)
        self.assertEqual(degree_threshold(P(10 ** 40, -2 * 10 ** 20, 1)), 10 ** 20 + 1)

    def test_th_root_intervals(self):
        self.assertEqual(real_root_intervals([7]), [])
        self.assertEqual(real_root_intervals([1, 0, 1]), [])
        for _ in range(200):
            degree = self.rng.randint(1, 6)
            coefficients = [self.rng.randint(-10 ** 6, 10 ** 6) for _ in range(degree)] + [self.rng.randint(1, 50)]
            intervals = real_root_intervals(coefficients)
            poly = P(*coefficients)
            for a, b in intervals:
                self.assertLess(b - a, 1)
            top = int(intervals[-1][1]) + 1 if intervals else -40
            for x in range(top, top + 40):
                self.assertGreater(poly(x), 0)

    def test_th_brute_force(self):
        for _ in range(200):
            degree = self.rng.randint(1, 4)
            coefficients = [self.rng.randint(-500, 500) for _ in range(degree)] + [self.rng.randint(1, 5)]
            poly = P(*coefficients)
            last = 0
            for x in range(1, 3000):
                if poly(x) <= 0:
                    last = x
            self.assertEqual(degree_threshold(poly), last + 1)
