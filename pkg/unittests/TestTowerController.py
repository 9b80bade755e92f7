import logging
import random
from unittest import TestCase

from PolyRing.Polynomial import Polynomial
from Tower.RelationSet import RelationSet
from Tower.TowerContext import TowerContext
from Tower.TowerController import TowerController
from TestPolynomial import random_polynomial


class TestTowerController(TestCase):
    def setUp(self):
        logging.disable(logging.CRITICAL)
        self.rng = random.Random(31337)

    def tower(self, n, k):
        return TowerController(TowerContext(n=n, k=k))

    def p(self, text, tower):
        return Polynomial.parse(text, tower.ctx.table)

    def test_tc_mismatched_relations(self):
        with self.assertRaises(ValueError):
            TowerController(TowerContext(n=2, k=2), RelationSet(TowerContext(n=2, k=1)))

    def test_tc_reduce_single_relation(self):
        t = self.tower(2, 1)
        self.assertEqual(t.reduce_tower(self.p("u1^2", t)), self.p("-c1*u1 - c2", t))

    def test_tc_reduce_already_reduced(self):
        t = self.tower(3, 2)
        q = self.p("u1^2*u2*h + 4*c3 - u2^2*c1", t)
        self.assertEqual(t.reduce_tower(q), q)

    def test_tc_reduce_two_levels(self):
        t = self.tower(2, 2)
        self.assertEqual(
            t.reduce_tower(self.p("u2^2*u1", t)),
            self.p("c2*u2 + c1^2*u1 - 2*c2*u1 + c1*c2", t)
        )

    def test_tc_reduce_degrees(self):
        t = self.tower(3, 3)
        table = t.ctx.table
        for _ in range(30):
            q = random_polynomial(self.rng, table, terms=3, max_exp=5, max_coeff=5)
            reduced = t.reduce_tower(q)
            for j in range(1, 4):
                self.assertLess(reduced.degree_in("u{}".format(j)), 3)

    def test_tc_reduce_relation_multiples(self):
        t = self.tower(2, 3)
        table = t.ctx.table
        for _ in range(30):
            j = self.rng.randint(1, 3)
            p = random_polynomial(self.rng, table, terms=3, max_exp=3, max_coeff=5)
            s = random_polynomial(self.rng, table, terms=3, max_exp=3, max_coeff=5)
            self.assertEqual(t.reduce_tower(t.relations.relation(j) * p + s), t.reduce_tower(s))

    def test_tc_integrate(self):
        t = self.tower(2, 1)
        self.assertEqual(t.integrate_fibers(self.p("u1", t)), 1)
        self.assertTrue(t.integrate_fibers(self.p("1", t)).is_zero())
        t2 = self.tower(2, 2)
        self.assertEqual(t2.integrate_fibers(self.p("h^2*u1*u2", t2)), self.p("h^2", t2))

    def test_tc_integrate_unreduced(self):
        t = self.tower(2, 2)
        with self.assertRaises(ValueError):
            t.integrate_fibers(self.p("u1^2*u2", t))

    def test_tc_intersect(self):
        t = self.tower(2, 1)
        self.assertEqual(t.intersect((3,)), self.p("c1^2 - c2", t))
        self.assertEqual(t.intersect((2,), self.p("c1", t)), self.p("-c1^2", t))

    def test_tc_intersect_top_monomial(self):
        t = self.tower(2, 2)
        self.assertEqual(t.intersect((2, 2)), self.p("c2", t))

    def test_tc_intersect_bad(self):
        t = self.tower(2, 2)
        with self.assertRaises(ValueError):
            t.intersect((2, 1))
        with self.assertRaises(ValueError):
            t.intersect((4,))
        with self.assertRaises(ValueError):
            t.intersect((5, -1))
        with self.assertRaises(ValueError):
            t.intersect((1, 1), self.p("c1 + h^2", t))

    def test_tc_reduced_product(self):
        t = self.tower(2, 2)
        F = self.p("2*u1 + u2 + 6*h", t)
        expanded = t.reduce_tower(F ** 4)
        self.assertEqual(t.reduced_power(F, 4, truncate_base=False), expanded)
        self.assertEqual(
            t.integrate_fibers(t.reduced_power(F, 4)),
            t.integrate_fibers(expanded)
        )

    def test_tc_reduced_product_random(self):
        t = self.tower(2, 2)
        table = t.ctx.table
        for _ in range(20):
            factors = [random_polynomial(self.rng, table, terms=3, max_exp=2, max_coeff=4) for _ in range(3)]
            product = factors[0] * factors[1] * factors[2]
            self.assertEqual(t.reduced_product(factors, truncate_base=False), t.reduce_tower(product))
