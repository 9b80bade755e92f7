import logging
import random
from unittest import TestCase

from PolyRing.Polynomial import DEGREE_OF_ZERO, Monomial, Polynomial
from PolyRing.VariableTable import VariableTable

NAMES = ["u1", "u2", "c1", "c2", "h", "d"]


def random_polynomial(rng, table, terms=4, max_exp=3, max_coeff=9):
    collected = []
    for _ in range(rng.randint(0, terms)):
        exponents = tuple(rng.randint(0, max_exp) if rng.random() < 0.5 else 0 for _ in table.names)
        collected.append((exponents, rng.randint(-max_coeff, max_coeff)))
    return Polynomial.from_terms(table, collected)


class TestPolynomial(TestCase):
    def setUp(self):
        logging.disable(logging.CRITICAL)
        self.table = VariableTable.for_names(NAMES)
        self.rng = random.Random(20080101)

    def p(self, text):
        return Polynomial.parse(text, self.table)

    def relation(self):
        return self.p("u1^2 + c1*u1 + c2")

    def test_po_add_cancellation(self):
        self.assertEqual(self.p("u1 + 1") + self.p("u1 - 1"), self.p("2*u1"))

    def test_po_add_identity(self):
        for _ in range(50):
            q = random_polynomial(self.rng, self.table)
            self.assertEqual(q + Polynomial.zero(self.table), q)

    def test_po_add_inverse(self):
        self.assertTrue((self.p("3*h - d") + self.p("d - 3*h")).is_zero())

    def test_po_mul(self):
        self.assertEqual(self.p("u1 + u2") * self.p("u1 - u2"), self.p("u1^2 - u2^2"))

    def test_po_mul_identity_and_zero(self):
        q = self.p("3*u1^2*h - 7*c2 + d")
        self.assertEqual(q * Polynomial.one(self.table), q)
        self.assertTrue((q * Polynomial.zero(self.table)).is_zero())

    def test_po_mul_int(self):
        self.assertEqual(3 * self.p("u1 - h"), self.p("3*u1 - 3*h"))
        self.assertEqual(self.p("u1") - 2, self.p("u1 - 2"))
        self.assertEqual(2 - self.p("u1"), self.p("2 - u1"))

    def test_po_pow(self):
        self.assertEqual(self.p("u1 + u2") ** 2, self.p("u1^2 + 2*u1*u2 + u2^2"))
        q = self.p("c1 - 4*h")
        self.assertEqual(q ** 1, q)
        self.assertEqual(q ** 0, 1)

    def test_po_pow_multinomial(self):
        table = VariableTable.for_names(["u1", "u2", "a1", "a2"])
        q = Polynomial.parse("(a1*u1 + a2*u2)^4", table)
        coefficient = q.coeff_of("a1", 2).coeff_of("a2", 2).coeff_of("u1", 2).coeff_of("u2", 2)
        self.assertEqual(coefficient, 6)

    def test_po_pow_bad(self):
        with self.assertRaises(ValueError):
            self.p("u1") ** -1
        with self.assertRaises(TypeError):
            self.p("u1") ** 1.5

    def test_po_constant_bad(self):
        with self.assertRaises(TypeError):
            Polynomial.constant(self.table, 1.5)
        with self.assertRaises(TypeError):
            self.p("u1") + True

    def test_po_coeff_of(self):
        self.assertEqual(self.p("3*u1^2*h + 2*u1").coeff_of("u1", 2), self.p("3*h"))
        self.assertTrue(self.p("u1 + h").coeff_of("u1", 4).is_zero())
        self.assertEqual(self.p("u2^3 + u1*u2^2").coeff_of("u2", 2), self.p("u1"))

    def test_po_substitute(self):
        self.assertEqual(self.p("u1^2 + h").substitute("u1", self.p("h")), self.p("h^2 + h"))
        q = self.p("u1^3*c2 - 5*u1*d + 1")
        self.assertEqual(q.substitute("u1", self.p("u1")), q)
        self.assertEqual(self.p("c1*h").substitute("c1", self.p("3 - d")), self.p("3*h - d*h"))

    def test_po_substitute_other_table(self):
        small = VariableTable.for_names(["h", "d"])
        self.assertEqual(
            self.p("c1^2").substitute("c1", Polynomial.parse("4 - d", small)),
            self.p("16 - 8*d + d^2")
        )

    def test_po_reduce_monic(self):
        self.assertEqual(self.p("u1^2").reduce_monic("u1", self.relation()), self.p("-c1*u1 - c2"))
        self.assertEqual(
            self.p("u1^3").reduce_monic("u1", self.relation()),
            self.p("(c1^2 - c2)*u1 + c1*c2")
        )

    def test_po_reduce_monic_low_degree(self):
        q = self.p("3*u1*h + c2")
        self.assertEqual(q.reduce_monic("u1", self.relation()), q)

    def test_po_reduce_monic_bad_relation(self):
        with self.assertRaises(ValueError):
            self.p("u1^3").reduce_monic("u1", self.p("2*u1^2 + c1"))
        with self.assertRaises(ValueError):
            self.p("u1^3").reduce_monic("u1", self.p("c1 + h"))
        with self.assertRaises(ValueError):
            self.p("u1^3").reduce_monic("u1", self.p("u1^2 + u1*c1*u1"))

    def test_po_degree_in(self):
        self.assertEqual(self.p("u1^2*h + u1").degree_in("u1"), 2)
        self.assertEqual(self.p("h^3").degree_in("u1"), 0)
        self.assertEqual(Polynomial.zero(self.table).degree_in("u1"), DEGREE_OF_ZERO)

    def test_po_eval_at_integer(self):
        self.assertEqual(self.p("d^2 - 4*d + 6").eval_at_integer("d", 2), 2)
        self.assertEqual(self.p("d^3 - 15*d^2").eval_at_integer("d", 15), 0)
        q = self.p("d^2*h + 3*d - c1")
        self.assertEqual(q.eval_at_integer("d", 0), q.coeff_of("d", 0))
        with self.assertRaises(TypeError):
            q.eval_at_integer("d", 0.5)

    def test_po_unknown_variable(self):
        with self.assertRaises(ValueError):
            self.p("u1").degree_in("u7")

    def test_po_dumps(self):
        self.assertEqual(self.p("2 - 3*c1*h + u1^2").dumps(), "u1^2 - 3*c1*h + 2")
        self.assertEqual(Polynomial.zero(self.table).dumps(), "0")
        self.assertEqual(self.p("-u1 - 1").dumps(), "-u1 - 1")

    def test_po_parse_round_trip(self):
        for _ in range(50):
            q = random_polynomial(self.rng, self.table)
            self.assertEqual(Polynomial.parse(q.dumps(), self.table), q)

    def test_po_parse_bad(self):
        with self.assertRaises(ValueError):
            self.p("u1 +* 2")
        with self.assertRaises(ValueError):
            self.p("x9^2")
        with self.assertRaises(ValueError):
            self.p("u1/2")
        with self.assertRaises(TypeError):
            Polynomial.parse(12, self.table)

    def test_po_canonical_terms(self):
        q = self.p("u1 + 0*h - u1 + 5*d")
        self.assertEqual(len(q), 1)
        for _, coeff in q.terms():
            self.assertNotEqual(coeff, 0)

    def test_po_monomial(self):
        m = Monomial([(2, 0), (1, 3), (0, 1)])
        self.assertEqual(m.exponents, {0: 1, 1: 3})
        self.assertEqual(m.degree, 4)
        self.assertEqual(m, Monomial.from_dense((1, 3, 0)))
        with self.assertRaises(ValueError):
            Monomial([(0, -1)])

    def test_po_truncate(self):
        q = self.p("c1^2*u1 + c2*h + h + u1^3")
        weights = {"c1": 1, "c2": 2, "h": 1}
        self.assertEqual(q.truncate(weights, 2), self.p("c1^2*u1 + h + u1^3"))
        self.assertEqual(q.weighted_degrees(weights), {0, 1, 2, 3})

    def test_po_univariate_coefficients(self):
        self.assertEqual(self.p("d^3 - 2*d + 7").univariate_coefficients("d"), [7, -2, 0, 1])
        self.assertEqual(Polynomial.zero(self.table).univariate_coefficients("d"), [])
        with self.assertRaises(ValueError):
            self.p("d*h").univariate_coefficients("d")

    def test_po_ring_laws(self):
        for _ in range(200):
            a, b, c = (random_polynomial(self.rng, self.table) for _ in range(3))
            self.assertEqual(a + b, b + a)
            self.assertEqual(a * b, b * a)
            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a * (b + c), a * b + a * c)

    def test_po_reduce_properties(self):
        rel = self.relation()
        for _ in range(200):
            a = random_polynomial(self.rng, self.table, max_exp=4)
            b = random_polynomial(self.rng, self.table, max_exp=4)
            ra = a.reduce_monic("u1", rel)
            self.assertLess(ra.degree_in("u1"), 2)
            self.assertEqual(ra.reduce_monic("u1", rel), ra)
            self.assertEqual(
                (a * b).reduce_monic("u1", rel),
                (ra * b.reduce_monic("u1", rel)).reduce_monic("u1", rel)
            )

    def test_po_reconstruction(self):
        for _ in range(200):
            q = random_polynomial(self.rng, self.table)
            for v in ("u1", "c2", "d"):
                parts = q.split(v)
                rebuilt = Polynomial.join(parts, v, self.table)
                self.assertEqual(rebuilt, q)
                total = Polynomial.zero(self.table)
                top = q.degree_in(v)
                for e in range(0, 0 if top == DEGREE_OF_ZERO else top + 1):
                    total = total + q.coeff_of(v, e) * self.p(v) ** e
                self.assertEqual(total, q)

    def test_po_eval_matches_substitute(self):
        for _ in range(200):
            q = random_polynomial(self.rng, self.table)
            x = self.rng.randint(-20, 20)
            self.assertEqual(
                q.eval_at_integer("d", x),
                q.substitute("d", Polynomial.constant(self.table, x))
            )
