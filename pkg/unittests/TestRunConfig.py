import logging
from unittest import TestCase

from Batch.RunConfig import RunConfig, TABLE_LIMIT
from Morse.WeightVector import WeightVector


class TestRunConfig(TestCase):
    def setUp(self):
        logging.disable(logging.CRITICAL)

    def test_cf_bound_defaults(self):
        cfg = RunConfig(command="bound", n=2, k=3)
        self.assertEqual(cfg.geometry, "log")
        self.assertEqual(cfg.effective_weights, WeightVector((6, 2, 1)))
        self.assertEqual(cfg.to_dict()["weights"], None)

    def test_cf_geometry_alias(self):
        self.assertEqual(RunConfig(command="bound", n=2, k=2, geometry="logarithmic").geometry, "log")
        with self.assertRaises(ValueError):
            RunConfig(command="bound", n=2, k=2, geometry="abelian")

    def test_cf_weights(self):
        cfg = RunConfig(command="poly", n=2, k=2, weights="3,1")
        self.assertEqual(cfg.effective_weights, WeightVector((3, 1)))
        with self.assertRaises(ValueError):
            RunConfig(command="poly", n=2, k=2, weights="1,1")
        with self.assertRaises(ValueError):
            RunConfig(command="poly", n=2, k=2, weights="6,2,1")
        with self.assertRaises(ValueError):
            RunConfig(command="table", weights="2,1", k=2)

    def test_cf_missing_dimensions(self):
        for command in ("bound", "poly", "sweep"):
            with self.assertRaises(ValueError):
                RunConfig(command=command, n=2)
        with self.assertRaises(ValueError):
            RunConfig(command="bound", n=1, k=1)
        with self.assertRaises(ValueError):
            RunConfig(command="poly", n=2, k=0)

    def test_cf_bad_values(self):
        with self.assertRaises(ValueError):
            RunConfig(command="prove", n=2, k=2)
        with self.assertRaises(ValueError):
            RunConfig(command="bound", n=2, k=2, response_format="xml")
        with self.assertRaises(TypeError):
            RunConfig(command="bound", n="2", k=2)
        with self.assertRaises(ValueError):
            RunConfig(command="bound", n=2, k=2, threads=0)
        with self.assertRaises(ValueError):
            RunConfig(command="sweep", n=2, k=2, sweep_budget=0)
        with self.assertRaises(ValueError):
            RunConfig(command="sweep", n=2, k=2, sweep_max_total=0)

    def test_cf_table_cells(self):
        cells = RunConfig(command="table").table_cells()
        self.assertEqual(len(cells), 10)
        self.assertEqual(cells[0], (2, 2))
        self.assertEqual(cells[-1], (TABLE_LIMIT, TABLE_LIMIT))
        self.assertTrue(all(n <= k for n, k in cells))
        self.assertEqual(RunConfig(command="table", n=3, k=3).table_cells(), [(2, 2), (2, 3), (3, 3)])

    def test_cf_verify(self):
        cfg = RunConfig(command="verify", response_format="json")
        self.assertIsNone(cfg.n)
        self.assertEqual(cfg.response_format, "json")

    def tearDown(self):
        logging.disable(logging.NOTSET)
