import logging
from unittest import TestCase

from PolyRing.VariableTable import VariableId, VariableTable, table_of_ring


class TestVariableTable(TestCase):
    def setUp(self):
        logging.disable(logging.CRITICAL)

    def test_vt_for_tower(self):
        table = VariableTable.for_tower(2, 3)
        self.assertEqual(table.names, ("u1", "u2", "u3", "c1", "c2", "h", "d"))
        self.assertEqual(table.arity, 7)

    def test_vt_for_tower_symbolic(self):
        table = VariableTable.for_tower(2, 2, symbolic_weights=True)
        self.assertEqual(table.names[-2:], ("a1", "a2"))

    def test_vt_shared_ring(self):
        self.assertIs(VariableTable.for_tower(3, 2).ring, VariableTable.for_tower(3, 2).ring)
        self.assertIs(table_of_ring(VariableTable.for_tower(3, 2).ring), VariableTable.for_tower(3, 2))

    def test_vt_for_names_canonical_order(self):
        table = VariableTable.for_names(["d", "h", "c2", "u10", "u2", "c1"])
        self.assertEqual(table.names, ("u2", "u10", "c1", "c2", "h", "d"))

    def test_vt_index(self):
        table = VariableTable.for_tower(2, 2)
        self.assertEqual(table.index("c1"), 2)
        self.assertEqual(table.index(3), 3)
        self.assertEqual(table.variable("h"), VariableId(index=4, name="h"))
        self.assertEqual(table.index(VariableId(index=0, name="h")), 4)

    def test_vt_index_bad(self):
        table = VariableTable.for_tower(2, 2)
        with self.assertRaises(ValueError):
            table.index("u3")
        with self.assertRaises(ValueError):
            table.index(17)
        with self.assertRaises(TypeError):
            table.index(True)
        with self.assertRaises(TypeError):
            table.index(1.0)

    def test_vt_bad_names(self):
        with self.assertRaises(ValueError):
            VariableTable([])
        with self.assertRaises(ValueError):
            VariableTable(["u1", "u1"])
        with self.assertRaises(ValueError):
            VariableTable(["u-1"])

    def test_vt_union(self):
        left = VariableTable.for_names(["c1", "h"])
        right = VariableTable.for_names(["h", "d"])
        self.assertEqual(left.union(right).names, ("c1", "h", "d"))
        self.assertIs(left.union(left), left)

    def test_vt_family_level(self):
        table = VariableTable.for_tower(3, 3)
        self.assertEqual(table.family("u3"), "u")
        self.assertEqual(table.level("u3"), 3)
        self.assertEqual(table.family("h"), "h")
        self.assertEqual(table.level("h"), 0)
        self.assertTrue(table.has("c3"))
        self.assertFalse(table.has("a1"))
