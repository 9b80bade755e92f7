import logging
from unittest import TestCase

from PersistenceExtensions.Redis import Persister


class TestPersisterRedis(TestCase):
    def setUp(self):
        logging.disable(logging.CRITICAL)
        self.p = Persister(
            host="foobar",
            port=6379,
            db=0
        )

    def tearDown(self):
        logging.disable(logging.NOTSET)

    def test_rp_noredis_host(self):
        with self.assertRaises(KeyError):
            self.p.save(key="foo", jsonstr="bar")

    def test_rp_bad_load(self):
        with self.assertRaises(KeyError):
            self.p.load(key="foo")

    def test_rp_bad_key(self):
        with self.assertRaises(TypeError):
            self.p.load(key=12)
