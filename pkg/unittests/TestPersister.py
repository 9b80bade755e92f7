import logging
import os
import shutil
import tempfile
from unittest import TestCase

from Persistence.PersistenceEngine import PersistenceEngine
from PersistenceExtensions.File import Persister


class TestPersister(TestCase):
    def setUp(self):
        logging.disable(logging.CRITICAL)
        self.cache_dir = tempfile.mkdtemp(prefix="jetbound-test-")

    def tearDown(self):
        shutil.rmtree(self.cache_dir, ignore_errors=True)
        logging.disable(logging.NOTSET)

    def test_pe_bad_engine(self):
        with self.assertRaises(TypeError):
            PersistenceEngine(
                engine_name="foobar",
                parameters={"cache_dir": self.cache_dir}
            )

    def test_pe_bad_parameters(self):
        with self.assertRaises(TypeError):
            PersistenceEngine(
                engine_name="file",
                parameters=[self.cache_dir]
            )

    def test_pe_bad_engine_name(self):
        with self.assertRaises(ValueError):
            PersistenceEngine(
                engine_name=None,
                parameters={"cache_dir": self.cache_dir}
            )

    def test_pe_engine_file(self):
        engine = PersistenceEngine(engine_name="FILE", parameters={"cache_dir": self.cache_dir})
        self.assertEqual(engine.engine_name, "File")
        self.assertIsInstance(engine.persister, Persister)
        self.assertEqual(engine.persister.cache_dir, self.cache_dir)

    def test_pe_save_load(self):
        p = Persister(cache_dir=os.path.join(self.cache_dir, "nested"))
        p.save(key="abc", jsonstr='{"dim": 2}')
        self.assertEqual(p.load(key="abc"), '{"dim": 2}')
        p.save(key="abc", jsonstr='{"dim": 3}')
        self.assertEqual(p.load(key="abc"), '{"dim": 3}')
        self.assertEqual(os.listdir(os.path.join(self.cache_dir, "nested")), ["abc.json"])

    def test_pe_missing_key(self):
        p = Persister(cache_dir=self.cache_dir)
        with self.assertRaises(KeyError):
            p.load(key="absent")

    def test_pe_bad_keys(self):
        p = Persister(cache_dir=self.cache_dir)
        with self.assertRaises(ValueError):
            p.load(key=None)
        with self.assertRaises(TypeError):
            p.save(key=42, jsonstr="{}")
        with self.assertRaises(ValueError):
            p.save(key="abc", jsonstr=None)

    def test_pe_unwritable(self):
        blocker = os.path.join(self.cache_dir, "blocker")
        with open(blocker, "w") as f:
            f.write("not a directory")
        p = Persister(cache_dir=blocker)
        with self.assertRaises(KeyError):
            p.save(key="abc", jsonstr="{}")

    def test_pe_no_cache_dir(self):
        with self.assertRaises(ValueError):
            Persister(cache_dir="")
