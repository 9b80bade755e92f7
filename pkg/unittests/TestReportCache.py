import json
import logging
import os
import shutil
import tempfile
from unittest import TestCase

from jetbound import ENGINE_VERSION
from Geometry.EvaluatedClass import EvaluatedClass
from Morse.MorseReport import MorseReport
from Morse.WeightVector import WeightVector
from Persistence.CacheEntry import CacheEntry
from Persistence.ReportCache import ReportCache
from PersistenceExtensions.File import Persister


class FailingPersister(object):
    def load(self, key=None):
        raise KeyError("unreachable")

    def save(self, key=None, jsonstr=None):
        raise KeyError("unreachable")


class TestReportCache(TestCase):
    def setUp(self):
        logging.disable(logging.CRITICAL)
        self.cache_dir = tempfile.mkdtemp(prefix="jetbound-test-")
        self.persister = Persister(cache_dir=self.cache_dir)
        self.cache = ReportCache(persister=self.persister)
        self.report = MorseReport(
            n=2,
            k=2,
            geometry="log",
            weights=WeightVector((2, 1)),
            morse_poly=EvaluatedClass.from_coefficients([0, -42, -5, 3]),
            leading_coeff=3,
            threshold=5,
            elapsed_ms=12
        )

    def tearDown(self):
        shutil.rmtree(self.cache_dir, ignore_errors=True)
        logging.disable(logging.NOTSET)

    def test_rc_key_is_stable(self):
        first = CacheEntry(dim=2, order=2, geometry="log", weights=[2, 1])
        second = CacheEntry(dim=2, order=2, geometry="log", weights=(2, 1))
        self.assertEqual(first.key, second.key)
        self.assertEqual(len(first.key), 64)
        self.assertEqual(first.identity["engine"], ENGINE_VERSION)

    def test_rc_key_separates_runs(self):
        base = CacheEntry(dim=2, order=2, geometry="log", weights=[2, 1]).key
        self.assertNotEqual(base, CacheEntry(dim=2, order=2, geometry="compact", weights=[2, 1]).key)
        self.assertNotEqual(base, CacheEntry(dim=2, order=2, geometry="log", weights=[4, 2]).key)
        self.assertNotEqual(base, CacheEntry(dim=3, order=2, geometry="log", weights=[2, 1]).key)

    def test_rc_entry_errors(self):
        with self.assertRaises(TypeError):
            CacheEntry(dim="2", order=2, geometry="log", weights=[2, 1])
        with self.assertRaises(TypeError):
            CacheEntry(dim=2, order=2, geometry=None, weights=[2, 1])
        with self.assertRaises(ValueError):
            CacheEntry(dim=2, order=2, geometry="log")
        entry = CacheEntry(dim=2, order=2, geometry="log", weights=[2, 1])
        with self.assertRaises(TypeError):
            entry.value = {"dim": 2}

    def test_rc_miss_then_hit(self):
        self.assertIsNone(self.cache.fetch(2, 2, "log", [2, 1]))
        entry = self.cache.store(self.report)
        self.assertTrue(os.path.exists(self.persister.filename(entry.key)))
        cached = self.cache.fetch(2, 2, "log", [2, 1])
        self.assertEqual(MorseReport.load(cached).content(), self.report.content())
        self.assertIsNone(self.cache.fetch(2, 2, "compact", [2, 1]))

    def test_rc_corrupt_entry(self):
        entry = CacheEntry(dim=2, order=2, geometry="log", weights=[2, 1])
        self.persister.save(key=entry.key, jsonstr="{truncated")
        self.assertIsNone(self.cache.fetch(2, 2, "log", [2, 1]))
        self.persister.save(key=entry.key, jsonstr=json.dumps({"dim": 2}))
        self.assertIsNone(self.cache.fetch(2, 2, "log", [2, 1]))

    def test_rc_disabled(self):
        cache = ReportCache(persister=self.persister, enabled=False)
        self.assertFalse(cache.enabled)
        self.assertIsNone(cache.store(self.report))
        self.assertEqual(os.listdir(self.cache_dir), [])
        self.assertFalse(ReportCache(persister=None).enabled)

    def test_rc_backend_failure(self):
        cache = ReportCache(persister=FailingPersister())
        self.assertIsNone(cache.store(self.report))
        self.assertIsNone(cache.fetch(2, 2, "log", [2, 1]))
