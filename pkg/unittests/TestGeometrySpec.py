import logging
from unittest import TestCase

from Geometry.EvaluatedClass import EvaluatedClass
from Geometry.GeometrySpec import GeometrySpec
from PolyRing.Polynomial import Polynomial
from PolyRing.VariableTable import VariableTable


class TestGeometrySpec(TestCase):
    def setUp(self):
        logging.disable(logging.CRITICAL)
        self.base = VariableTable.for_names(["h", "d"])
        self.classes = VariableTable.for_names(["u1", "c1", "c2", "c3", "h", "d"])

    def hd(self, text):
        return Polynomial.parse(text, self.base)

    def cls(self, text):
        return Polynomial.parse(text, self.classes)

    def test_gs_kinds(self):
        self.assertEqual(GeometrySpec("logarithmic_pair", 2).kind, GeometrySpec.LOGARITHMIC)
        self.assertEqual(GeometrySpec("Compact", 2).kind, GeometrySpec.COMPACT)
        with self.assertRaises(ValueError):
            GeometrySpec("toric", 2)
        with self.assertRaises(TypeError):
            GeometrySpec(None, 2)
        with self.assertRaises(ValueError):
            GeometrySpec("log", 0)

    def test_gs_base_chern_log(self):
        self.assertEqual(GeometrySpec("log", 2).base_chern(1), self.hd("(3 - d)*h"))
        self.assertEqual(GeometrySpec("log", 2).base_chern(2), self.hd("(d^2 - 3*d + 3)*h^2"))

    def test_gs_base_chern_compact(self):
        self.assertEqual(GeometrySpec("compact", 2).base_chern(1), self.hd("(4 - d)*h"))
        self.assertEqual(GeometrySpec("compact", 2).base_chern(2), self.hd("(d^2 - 4*d + 6)*h^2"))

    def test_gs_base_chern_range(self):
        with self.assertRaises(ValueError):
            GeometrySpec("log", 2).base_chern(0)
        with self.assertRaises(ValueError):
            GeometrySpec("log", 2).base_chern(3)

    def test_gs_compact_identity(self):
        h, d = self.hd("h"), self.hd("d")
        for n in range(1, 7):
            geometry = GeometrySpec("compact", n)
            total = Polynomial.one(self.base)
            for j in range(1, n + 1):
                total = total + geometry.base_chern(j)
            self.assertEqual(
                ((1 + d * h) * total).truncate({"h": 1}, n),
                ((1 + h) ** (n + 2)).truncate({"h": 1}, n)
            )

    def test_gs_log_closed_form(self):
        # c_j = sum_i (-1)^(j-i) C(n+1, i) d^(j-i) h^j
        from math import comb
        for n in range(1, 6):
            geometry = GeometrySpec("log", n)
            for j in range(1, n + 1):
                expected = Polynomial.zero(self.base)
                for i in range(0, j + 1):
                    expected = expected + (-1) ** (j - i) * comb(n + 1, i) * self.hd("d") ** (j - i)
                self.assertEqual(geometry.base_chern(j), expected * self.hd("h") ** j)

    def test_gs_log_cotangent_sequence(self):
        for n in range(1, 5):
            geometry = GeometrySpec("log", n)
            for j in range(1, n + 1):
                self.assertEqual(geometry.cotangent_sequence_chern(j), geometry.base_chern(j))
        with self.assertRaises(ValueError):
            GeometrySpec("compact", 2).cotangent_sequence_chern(1)

    def test_gs_evaluate_hn(self):
        self.assertEqual(GeometrySpec("log", 2).evaluate_in_degree(self.cls("h^2")).coefficients, [0, 1])

    def test_gs_evaluate_c1_squared(self):
        evaluated = GeometrySpec("log", 2).evaluate_in_degree(self.cls("c1^2"))
        self.assertEqual(evaluated.coefficients, [0, 9, -6, 1])

    def test_gs_evaluate_top_chern_power(self):
        for n, text in ((2, "c1^2"), (3, "-c1^3")):
            evaluated = GeometrySpec("compact", n).evaluate_in_degree(self.cls(text))
            self.assertEqual(evaluated.degree, n + 1)
            self.assertEqual(evaluated.coefficient(n + 1), 1)

    def test_gs_evaluate_without_normalization(self):
        evaluated = GeometrySpec("log", 2).evaluate_in_degree(self.cls("c1^2"), normalize=False)
        self.assertEqual(evaluated.coefficients, [9, -6, 1])

    def test_gs_evaluate_residual_tower_variable(self):
        with self.assertRaises(ValueError):
            GeometrySpec("log", 2).evaluate_in_degree(self.cls("u1*h"))

    def test_gs_evaluate_inhomogeneous(self):
        with self.assertRaises(ValueError):
            GeometrySpec("log", 2).evaluate_in_degree(self.cls("c1 + h^2"))
        with self.assertRaises(ValueError):
            GeometrySpec("log", 2).evaluate_in_degree(self.cls("c1"))
        with self.assertRaises(ValueError):
            GeometrySpec("log", 2).evaluate_in_degree(self.cls("c3"))

    def test_gs_evaluate_zero(self):
        evaluated = GeometrySpec("compact", 2).evaluate_in_degree(Polynomial.zero(self.classes))
        self.assertEqual(evaluated.coefficients, [])
        self.assertEqual(evaluated(7), 0)


class TestEvaluatedClass(TestCase):
    def setUp(self):
        logging.disable(logging.CRITICAL)

    def test_ec_from_coefficients(self):
        P = EvaluatedClass.from_coefficients([-3, 1, 0])
        self.assertEqual(P.coefficients, [-3, 1])
        self.assertEqual(P.degree, 1)
        self.assertEqual(P.leading_coefficient, 1)
        self.assertEqual(P(3), 0)
        self.assertEqual(P.coefficient(5), 0)
        self.assertEqual(P.dumps(), "d - 3")

    def test_ec_only_d(self):
        table = VariableTable.for_names(["h", "d"])
        with self.assertRaises(ValueError):
            EvaluatedClass(Polynomial.parse("d*h", table))
        with self.assertRaises(TypeError):
            EvaluatedClass([1, 2])

    def test_ec_equality(self):
        table = VariableTable.for_names(["c1", "h", "d"])
        self.assertEqual(
            EvaluatedClass(Polynomial.parse("d^2 + 1", table)),
            EvaluatedClass.from_coefficients([1, 0, 1])
        )
