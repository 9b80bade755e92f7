import logging
import shutil
import tempfile
from unittest import TestCase

from Batch.BatchRunner import BatchRunner, Job, run_job
from Morse.MorseReport import MorseReport
from Persistence.ReportCache import ReportCache
from PersistenceExtensions.File import Persister


class TestBatchRunner(TestCase):
    def setUp(self):
        logging.disable(logging.CRITICAL)
        self.cache_dir = tempfile.mkdtemp(prefix="jetbound-test-")
        self.cache = ReportCache(persister=Persister(cache_dir=self.cache_dir))

    def tearDown(self):
        shutil.rmtree(self.cache_dir, ignore_errors=True)
        logging.disable(logging.NOTSET)

    def test_bt_run_job(self):
        report = MorseReport.load(run_job(Job(n=2, k=2, geometry="log", weights=(2, 1))))
        self.assertEqual(report.threshold, 15)

    def test_bt_order_preserved(self):
        jobs = [
            Job(n=2, k=2, geometry="log", weights=(3, 1)),
            Job(n=2, k=1, geometry="log", weights=(1,)),
            Job(n=2, k=2, geometry="log", weights=(2, 1)),
        ]
        reports = BatchRunner(threads=1).run(jobs)
        self.assertEqual([tuple(r.weights.a) for r in reports], [(3, 1), (1,), (2, 1)])
        self.assertEqual(reports[2].threshold, 15)
        self.assertIsNone(reports[1].threshold)

    def test_bt_cache_hit(self):
        jobs = [Job(n=2, k=2, geometry="log", weights=(2, 1))]
        first = BatchRunner(cache=self.cache, threads=1).run(jobs)[0]
        self.assertIsNotNone(self.cache.fetch(2, 2, "log", (2, 1)))
        second = BatchRunner(cache=self.cache, threads=1).run(jobs)[0]
        self.assertEqual(second.content(), first.content())
        self.assertEqual(second.elapsed_ms, first.elapsed_ms)

    def test_bt_threads_default(self):
        self.assertGreaterEqual(BatchRunner().threads, 1)
        self.assertEqual(BatchRunner(threads=3).threads, 3)
