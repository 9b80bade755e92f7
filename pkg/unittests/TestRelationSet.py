import logging
from unittest import TestCase

from PolyRing.Polynomial import Polynomial
from Tower.RelationSet import RelationSet, build_relations, chern_coefficient
from Tower.TowerContext import TowerContext


class TestRelationSet(TestCase):
    def setUp(self):
        logging.disable(logging.CRITICAL)

    def p(self, text, ctx):
        return Polynomial.parse(text, ctx.table)

    def test_rs_context_invariants(self):
        ctx = TowerContext(n=3, k=4)
        self.assertEqual(ctx.r, 3)
        self.assertEqual(ctx.total_dim, 3 + 4 * 2)
        with self.assertRaises(ValueError):
            TowerContext(n=3, k=2, r=2)
        with self.assertRaises(ValueError):
            TowerContext(n=0, k=2)
        with self.assertRaises(ValueError):
            TowerContext(n=2, k=0)
        with self.assertRaises(TypeError):
            TowerContext(n="2", k=1)

    def test_rs_first_level(self):
        ctx = TowerContext(n=2, k=1)
        rels = build_relations(ctx)
        self.assertEqual(rels.relation(1), self.p("u1^2 + c1*u1 + c2", ctx))

    def test_rs_second_level(self):
        ctx = TowerContext(n=2, k=2)
        rels = RelationSet(ctx)
        self.assertEqual(rels.lifted_chern(1, 1), self.p("c1 + u1", ctx))
        self.assertEqual(rels.lifted_chern(1, 2), self.p("c2 - u1^2", ctx))
        self.assertEqual(rels.relation(2), self.p("u2^2 + (c1 + u1)*u2 + c2 - u1^2", ctx))

    def test_rs_lifted_chern_edges(self):
        ctx = TowerContext(n=2, k=2)
        rels = RelationSet(ctx)
        self.assertEqual(rels.lifted_chern(0, 0), 1)
        self.assertEqual(rels.lifted_chern(0, 2), self.p("c2", ctx))
        self.assertTrue(rels.lifted_chern(1, 3).is_zero())
        with self.assertRaises(ValueError):
            rels.lifted_chern(2, 1)
        with self.assertRaises(ValueError):
            rels.relation(3)

    def test_rs_first_chern_identity(self):
        for n in range(1, 5):
            for k in range(1, 5):
                ctx = TowerContext(n=n, k=k)
                rels = RelationSet(ctx)
                for j in range(k):
                    expected = self.p("c1", ctx)
                    for s in range(1, j + 1):
                        expected = expected + (n - 1) * self.p("u{}".format(s), ctx)
                    self.assertEqual(rels.lifted_chern(j, 1), expected)

    def test_rs_relations_monic(self):
        ctx = TowerContext(n=3, k=3)
        rels = RelationSet(ctx)
        for j in range(1, 4):
            q = rels.relation(j)
            self.assertEqual(q.degree_in("u{}".format(j)), 3)
            self.assertEqual(q.coeff_of("u{}".format(j), 3), 1)

    def test_rs_residue(self):
        ctx = TowerContext(n=2, k=1)
        rels = RelationSet(ctx)
        self.assertEqual(rels.residue(1, 1), self.p("u1", ctx))
        self.assertEqual(rels.residue(1, 3), self.p("(c1^2 - c2)*u1 + c1*c2", ctx))
        self.assertIs(rels.residue(1, 3), rels.residue(1, 3))

    def test_rs_chern_coefficient(self):
        self.assertEqual(chern_coefficient(2, 1, 0), 1)
        self.assertEqual(chern_coefficient(2, 2, 0), -1)
        self.assertEqual(chern_coefficient(2, 2, 1), 0)
        self.assertEqual(chern_coefficient(3, 2, 0), 0)
        self.assertEqual(chern_coefficient(3, 3, 3), 1)
        self.assertEqual(chern_coefficient(1, 1, 1), 1)
        self.assertEqual(chern_coefficient(4, 3, 2), 1)
        self.assertEqual(chern_coefficient(5, 2, 0), 5)

    def test_rs_dumps(self):
        rels = RelationSet(TowerContext(n=2, k=1))
        self.assertEqual(rels.dumps(), "q1 = u1^2 + u1*c1 + c2")
