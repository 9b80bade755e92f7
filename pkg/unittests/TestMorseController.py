import logging
from unittest import TestCase

from Geometry.GeometrySpec import GeometrySpec
from Morse.MorseController import (
    MorseController, degree_threshold, leading_degree_coefficient, leading_form_interpolated,
    leading_form_symbolic, morse_class, morse_polynomial, nef_classes, self_intersection_polynomial,
    tower_controller
)
from Morse.WeightVector import WeightVector
from PolyRing.Polynomial import Polynomial
from Tower.TowerContext import TowerContext


class TestMorseController(TestCase):
    def setUp(self):
        logging.disable(logging.CRITICAL)

    def test_mc_nef_classes(self):
        ctx = TowerContext(n=2, k=2)
        F, G = nef_classes(ctx, (2, 1))
        self.assertEqual(F, Polynomial.parse("2*u1 + u2 + 6*h", ctx.table))
        self.assertEqual(G, Polynomial.parse("6*h", ctx.table))
        self.assertEqual(ctx.total_dim, 4)

    def test_mc_morse_class(self):
        ctx = TowerContext(n=2, k=2)
        F = Polynomial.parse("2*u1 + u2 + 6*h", ctx.table)
        G = Polynomial.parse("6*h", ctx.table)
        R = morse_class(ctx, (2, 1))
        self.assertEqual(R, (F - 4 * G) * F ** 3)
        self.assertEqual(R.weighted_degrees(ctx.class_weights), {4})

    def test_mc_default_weights_match_listing(self):
        for k in range(1, 6):
            ctx = TowerContext(n=2, k=k)
            F, G = nef_classes(ctx, WeightVector.default(k))
            expected_G = Polynomial.parse("{}*h".format(2 * 3 ** (k - 1)), ctx.table)
            expected_F = expected_G + Polynomial.parse("u{}".format(k), ctx.table)
            for j in range(1, k):
                expected_F = expected_F + Polynomial.parse("{}*u{}".format(2 * 3 ** (k - j - 1), j), ctx.table)
            self.assertEqual(G, expected_G)
            self.assertEqual(F, expected_F)

    def test_mc_inadmissible(self):
        with self.assertRaises(ValueError):
            MorseController(n=2, k=2, geometry="log", weights=(1, 1))
        with self.assertRaises(ValueError):
            MorseController(n=2, k=2, geometry="log", weights=(6, 2, 1))
        with self.assertRaises(ValueError):
            morse_class(TowerContext(n=2, k=2), (1, 1))
        with self.assertRaises(ValueError):
            MorseController(n=2, k=2, geometry="log", strategy="fastest")
        with self.assertRaises(ValueError):
            MorseController(n=2, k=2, geometry=GeometrySpec("log", 3))

    def test_mc_symbolic_needs_context(self):
        with self.assertRaises(ValueError):
            nef_classes(TowerContext(n=2, k=2))

    def test_mc_table_cells(self):
        self.assertEqual(MorseController(n=2, k=2, geometry="log").run().threshold, 15)
        self.assertEqual(MorseController(n=2, k=3, geometry="log").run().threshold, 14)

    def test_mc_pinned_dimension_two(self):
        log = MorseController(n=2, k=2, geometry="log")
        integrated = log.integrated_class()
        self.assertEqual(integrated, Polynomial.parse("39*c1^2 - 27*c2 - 648*h^2", integrated.table))
        self.assertEqual(log.morse_polynomial().coefficients, [0, -378, -153, 12])

        compact = MorseController(n=2, k=2, geometry="compact").run()
        self.assertEqual(compact.morse_poly.coefficients, [0, -186, -204, 12])
        self.assertEqual(compact.threshold, 18)
        self.assertLessEqual(compact.morse_poly(17), 0)

    def test_mc_explicit_default_weights(self):
        report = MorseController(n=2, k=2, geometry="log", weights=WeightVector("2,1")).run()
        self.assertEqual(report.threshold, 15)
        self.assertEqual(report.total_dim, 4)
        self.assertGreater(report.leading_coeff, 0)

    def test_mc_report_threshold_matches(self):
        report = MorseController(n=2, k=2, geometry="compact").run()
        self.assertEqual(report.threshold, degree_threshold(report.morse_poly))
        self.assertLessEqual(report.morse_poly.degree, 3)

    def test_mc_order_one_vanishes(self):
        for kind in ("log", "compact"):
            for a in ((1,), (2,), (5,)):
                P = morse_polynomial(2, 1, a, kind)
                self.assertEqual(P.coefficient(3), 0)
                report = MorseController(n=2, k=1, geometry=kind, weights=a).run()
                self.assertIsNone(report.threshold)

    def test_mc_low_order_leading_zero(self):
        for kind in ("log", "compact"):
            for k, weights in ((1, ((1,), (4,), (9,))), (2, ((2, 1), (5, 2), (9, 4)))):
                for a in weights:
                    self.assertEqual(leading_degree_coefficient(3, k, a, kind), 0)

    def test_mc_strategies_agree(self):
        for n, k in ((2, 1), (2, 2), (2, 3), (3, 2)):
            for kind in ("log", "compact"):
                listing = MorseController(n=n, k=k, geometry=kind, strategy="listing")
                reduced = MorseController(n=n, k=k, geometry=kind)
                self.assertEqual(listing.integrated_class(), reduced.integrated_class())
                self.assertEqual(listing.morse_polynomial(), reduced.morse_polynomial())

    def test_mc_leading_agreement(self):
        for kind in ("log", "compact"):
            controller = MorseController(n=2, k=2, geometry=kind, weights=(3, 1))
            leading = controller.morse_polynomial().coefficient(3)
            self.assertEqual(controller.morse_polynomial(correction=False).coefficient(3), leading)
            self.assertEqual(controller.leading_degree_coefficient(), leading)
            self.assertEqual(self_intersection_polynomial(2, 2, (3, 1), kind).coefficient(3), leading)

    def test_mc_scaling(self):
        base = MorseController(n=2, k=2, geometry="log").run()
        doubled = MorseController(n=2, k=2, geometry="log", weights=(4, 2)).run()
        self.assertEqual(doubled.threshold, base.threshold)
        self.assertEqual(doubled.morse_poly.coefficients, [16 * c for c in base.morse_poly.coefficients])

    def test_mc_top_monomial_compact(self):
        geometry = GeometrySpec("compact", 2)
        tower = tower_controller(2, 2)
        evaluated = geometry.evaluate_in_degree(tower.intersect((2, 2)))
        self.assertEqual(evaluated.coefficient(3), 1)

    def test_mc_multinomial_coefficient(self):
        form = leading_form_interpolated(2, 2, "compact")
        self.assertEqual(form.coeff_of("a1", 2).coeff_of("a2", 2), 6)
        self.assertEqual(form.weighted_degrees({"a1": 1, "a2": 1}), {4})

    def test_mc_symbolic_matches_interpolation(self):
        self.assertEqual(leading_form_symbolic(2, 2, "compact"), leading_form_interpolated(2, 2, "compact"))

    def test_mc_leading_form_values(self):
        form = leading_form_symbolic(2, 2, "log")
        for a in ((2, 1), (5, 2), (7, 1)):
            value = form.eval_at_integer("a1", a[0]).eval_at_integer("a2", a[1])
            self.assertEqual(value, leading_degree_coefficient(2, 2, a, "log"))
