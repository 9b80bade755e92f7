import json
import logging
from unittest import TestCase

from Geometry.EvaluatedClass import EvaluatedClass
from Morse.MorseReport import MorseReport
from Morse.WeightVector import WeightVector


class TestMorseReport(TestCase):
    def setUp(self):
        logging.disable(logging.CRITICAL)
        self.report = MorseReport(
            n=2,
            k=2,
            geometry="log",
            weights=WeightVector((2, 1)),
            morse_poly=EvaluatedClass.from_coefficients([0, -42, -5, 3]),
            leading_coeff=3,
            threshold=5,
            elapsed_ms=17
        )

    def test_mr_to_dict(self):
        report = self.report.to_dict()
        self.assertEqual(sorted(report.keys()), sorted(MorseReport.FIELDS))
        self.assertEqual(report["polynomial"], ["0", "-42", "-5", "3"])
        self.assertEqual(report["leading_coeff"], "3")
        self.assertEqual(report["total_dim"], 4)
        self.assertEqual(report["weights"], [2, 1])
        self.assertNotIn("elapsed_ms", self.report.to_dict(include_elapsed=False))

    def test_mr_dump_load(self):
        loaded = MorseReport.load(self.report.dump())
        self.assertEqual(loaded.threshold, 5)
        self.assertEqual(loaded.morse_poly, self.report.morse_poly)
        self.assertEqual(loaded.weights, WeightVector((2, 1)))
        self.assertEqual(loaded.elapsed_ms, 17)
        self.assertEqual(loaded.dump(), self.report.dump())

    def test_mr_load_dict(self):
        loaded = MorseReport.load(self.report.to_dict())
        self.assertEqual(loaded.content(), self.report.content())

    def test_mr_content_ignores_timing(self):
        self.report.elapsed_ms = 900
        other = MorseReport.load(self.report.dump())
        other.elapsed_ms = 1
        self.assertEqual(other.content(), self.report.content())
        self.assertNotEqual(other.dump(), self.report.dump())

    def test_mr_large_coefficients(self):
        big = 3 ** 200
        report = MorseReport(
            n=2,
            k=1,
            geometry="compact",
            weights=WeightVector((1,)),
            morse_poly=EvaluatedClass.from_coefficients([-big, 0, 0, big]),
            leading_coeff=big,
            threshold=2
        )
        self.assertEqual(MorseReport.load(report.dump()).leading_coeff, big)

    def test_mr_threshold_invariant(self):
        with self.assertRaises(ValueError):
            MorseReport(
                n=2, k=2, geometry="log", weights=WeightVector((2, 1)),
                morse_poly=EvaluatedClass.from_coefficients([1, 0, 0]),
                leading_coeff=0, threshold=4
            )
        with self.assertRaises(ValueError):
            MorseReport(
                n=2, k=2, geometry="log", weights=WeightVector((2, 1)),
                morse_poly=EvaluatedClass.from_coefficients([1, 0, 0, 1]),
                leading_coeff=1, threshold=None
            )

    def test_mr_no_threshold(self):
        report = MorseReport(
            n=3, k=2, geometry="compact", weights=WeightVector((2, 1)),
            morse_poly=EvaluatedClass.from_coefficients([4, -1]),
            leading_coeff=0, threshold=None
        )
        self.assertFalse(report.has_threshold)
        self.assertIsNone(json.loads(report.dump())["threshold"])

    def test_mr_bad_types(self):
        with self.assertRaises(TypeError):
            MorseReport(
                n=2, k=2, geometry="log", weights=(2, 1),
                morse_poly=EvaluatedClass.from_coefficients([1]),
                leading_coeff=0
            )
        with self.assertRaises(TypeError):
            MorseReport(
                n=2, k=2, geometry="log", weights=WeightVector((2, 1)),
                morse_poly=[1, 0, 1], leading_coeff=0
            )

    def test_mr_bad_json(self):
        with self.assertRaises(ValueError):
            MorseReport.load("{not json")
        with self.assertRaises(ValueError):
            MorseReport.load(None)

    def test_mr_schema_mismatch(self):
        report = self.report.to_dict()
        report["geometry"] = "projective"
        with self.assertRaises(ValueError):
            MorseReport.load(report)
        report = self.report.to_dict()
        report["polynomial"] = [0, -42, -5, 3]
        with self.assertRaises(ValueError):
            MorseReport.load(report)
        report = self.report.to_dict()
        report["colour"] = "blue"
        with self.assertRaises(ValueError):
            MorseReport.load(json.dumps(report))

    def test_mr_total_dim_mismatch(self):
        report = self.report.to_dict()
        report["total_dim"] = 5
        with self.assertRaises(ValueError):
            MorseReport.load(report)

    def tearDown(self):
        logging.disable(logging.NOTSET)
