import itertools
import logging
from unittest import TestCase

from Morse.WeightVector import WeightVector, admissible_weights, default_weights, is_admissible, minimal_total


class TestWeightVector(TestCase):
    def setUp(self):
        logging.disable(logging.CRITICAL)

    def test_wv_default(self):
        self.assertEqual(default_weights(1).a, (1,))
        self.assertEqual(default_weights(2).a, (2, 1))
        self.assertEqual(default_weights(3).a, (6, 2, 1))
        five = default_weights(5)
        self.assertEqual(five.a, (54, 18, 6, 2, 1))
        self.assertEqual(five.total, 81)

    def test_wv_default_bad(self):
        with self.assertRaises(ValueError):
            default_weights(0)

    def test_wv_default_admissible_and_minimal(self):
        for k in range(1, 7):
            self.assertTrue(default_weights(k).is_admissible())
            self.assertEqual(default_weights(k).total, minimal_total(k))

    def test_wv_is_admissible(self):
        self.assertTrue(is_admissible((6, 2, 1)))
        self.assertFalse(is_admissible((1, 1)))
        self.assertTrue(is_admissible((3, 1)))
        self.assertTrue(is_admissible((2, 1)))
        self.assertFalse(is_admissible((5, 2, 1)))
        self.assertFalse(is_admissible((0,)))
        self.assertFalse(is_admissible(()))
        self.assertFalse(is_admissible(("x", 1)))

    def test_wv_partial_sums(self):
        a = WeightVector((6, 2, 1))
        self.assertEqual(a.b, (6, 8, 9))
        self.assertEqual(a.k, 3)
        self.assertEqual(a.scaled(2).a, (12, 4, 2))

    def test_wv_parse(self):
        self.assertEqual(WeightVector("18, 6,2,1").a, (18, 6, 2, 1))
        self.assertEqual(WeightVector("2,1").dumps(), "2,1")
        with self.assertRaises(TypeError):
            WeightVector("2,x")
        with self.assertRaises(ValueError):
            WeightVector((2, 0))
        with self.assertRaises(ValueError):
            WeightVector(())

    def test_wv_enumeration_small(self):
        self.assertEqual([a.a for a in admissible_weights(2, 5)], [(2, 1), (3, 1), (4, 1)])
        self.assertEqual(
            [a.a for a in admissible_weights(2, 6)],
            [(2, 1), (3, 1), (4, 1), (4, 2), (5, 1)]
        )
        self.assertEqual([a.a for a in admissible_weights(3, 10)], [(6, 2, 1), (7, 2, 1)])
        self.assertEqual(admissible_weights(3, 8), [])

    def test_wv_enumeration_complete(self):
        for k, limit in ((1, 12), (2, 20), (3, 30)):
            brute = sorted(
                (t for t in itertools.product(range(1, limit + 1), repeat=k)
                 if sum(t) <= limit and is_admissible(t)),
                key=lambda t: (sum(t), t)
            )
            self.assertEqual([a.a for a in admissible_weights(k, limit)], brute)

    def test_wv_ordering(self):
        self.assertLess(WeightVector((2, 1)), WeightVector((3, 1)))
        self.assertLess(WeightVector((4, 2)), WeightVector((5, 1)))
