import logging
import random
from unittest import TestCase

from Geometry.EvaluatedClass import EvaluatedClass
from Morse.LemmaSuite import LemmaSuite
from Morse.MorseController import degree_threshold
from PolyRing.Polynomial import Polynomial
from PolyRing.VariableTable import VariableTable
from Tower.TowerContext import TowerContext
from Tower.TowerController import TowerController
from unittests.TestPolynomial import random_polynomial

CASES = 1000


class TestProperties(TestCase):
    def setUp(self):
        logging.disable(logging.CRITICAL)
        self.rng = random.Random(19720707)

    def tearDown(self):
        logging.disable(logging.NOTSET)

    def test_pp_ring_laws(self):
        table = VariableTable.for_tower(2, 2)
        for _ in range(CASES):
            p, q, s = (random_polynomial(self.rng, table, terms=3, max_exp=2) for _ in range(3))
            self.assertEqual(p + q, q + p)
            self.assertEqual(p * q, q * p)
            self.assertEqual((p * q) * s, p * (q * s))
            self.assertEqual(p * (q + s), p * q + p * s)

    def test_pp_reduction_respects_products(self):
        tower = TowerController(TowerContext(n=2, k=2))
        table = tower.ctx.table
        for _ in range(CASES):
            p = random_polynomial(self.rng, table, terms=3, max_exp=3, max_coeff=5)
            q = random_polynomial(self.rng, table, terms=3, max_exp=3, max_coeff=5)
            reduced = tower.reduce_tower(p)
            self.assertEqual(tower.reduce_tower(reduced), reduced)
            self.assertEqual(
                tower.reduce_tower(p * q),
                tower.reduce_tower(reduced * tower.reduce_tower(q))
            )

    def test_pp_reduce_monic(self):
        table = VariableTable.for_tower(2, 2)
        relation = Polynomial.parse("u1^2 + c1*h*u1 + c2", table)
        for _ in range(CASES):
            p = random_polynomial(self.rng, table, terms=4, max_exp=4, max_coeff=9)
            q = random_polynomial(self.rng, table, terms=2, max_exp=2, max_coeff=9)
            remainder = p.reduce_monic("u1", relation)
            self.assertLess(remainder.degree_in("u1"), 2)
            self.assertEqual(remainder.reduce_monic("u1", relation), remainder)
            self.assertEqual((p + q * relation).reduce_monic("u1", relation), remainder)
            self.assertEqual(
                (p * q).reduce_monic("u1", relation),
                (remainder * q.reduce_monic("u1", relation)).reduce_monic("u1", relation)
            )

    def test_pp_coefficient_reconstruction(self):
        table = VariableTable.for_tower(3, 2)
        for _ in range(CASES):
            p = random_polynomial(self.rng, table, terms=5, max_exp=4)
            for v in ("u1", "c2", "h"):
                self.assertEqual(Polynomial.join(p.split(v), v, table), p)

    def test_pp_first_chern_identity(self):
        suite = LemmaSuite(max_dim=5, checks=["first_chern"])
        results = suite.run()
        self.assertTrue(LemmaSuite.all_passed(results))
        self.assertEqual({r.n for r in results}, {2, 3, 4, 5})

    def test_pp_lemma_suites(self):
        results = LemmaSuite(max_dim=3).run()
        failures = [r for r in results if not r.passed]
        self.assertEqual(failures, [])

    def test_pp_threshold_brute_force(self):
        for _ in range(CASES):
            degree = self.rng.randint(1, 6)
            coefficients = [self.rng.randint(-300, 300) for _ in range(degree)] + [self.rng.randint(1, 4)]
            P = EvaluatedClass.from_coefficients(coefficients)
            expected = 1
            for d in range(1, 2000):
                if P(d) <= 0:
                    expected = d + 1
            self.assertEqual(degree_threshold(P), expected, coefficients)
