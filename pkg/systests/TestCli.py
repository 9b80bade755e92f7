import contextlib
import csv
import io
import json
import logging
import os
import shutil
import tempfile
from unittest import TestCase, mock

from jetbound import settings
from Commands.Application import main
from Morse.MorseController import MorseController
from Persistence.PersistenceEngine import PersistenceEngine


def run_main(argv):
    out = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
        status = main(argv)
    return status, out.getvalue()


class TestCli(TestCase):
    def setUp(self):
        logging.disable(logging.CRITICAL)
        self.cache_dir = tempfile.mkdtemp(prefix="jetbound-cli-")
        engine = PersistenceEngine(engine_name="file", parameters={"cache_dir": self.cache_dir})
        self.patcher = mock.patch.dict(settings, {"PERSISTER": engine, "JETBOUND_CACHE_ENABLED": True})
        self.patcher.start()

    def tearDown(self):
        self.patcher.stop()
        shutil.rmtree(self.cache_dir, ignore_errors=True)
        logging.disable(logging.NOTSET)

    def test_cl_poly_csv(self):
        status, out = run_main(["poly", "--dim", "2", "--order", "3", "--format", "csv", "--no-cache"])
        self.assertEqual(status, 0)
        rows = list(csv.reader(io.StringIO(out)))
        coefficients = [int(row[1]) for row in rows[1:]]
        expected = MorseController(n=2, k=3, geometry="log").morse_polynomial().coefficients
        self.assertEqual(coefficients, expected)

    def test_cl_cache_hit(self):
        argv = ["bound", "--dim", "2", "--order", "3", "--format", "json", "--threads", "1"]
        status, first = run_main(argv)
        self.assertEqual(status, 0)
        self.assertEqual(len(os.listdir(self.cache_dir)), 1)
        status, second = run_main(argv)
        self.assertEqual(status, 0)
        first_report, second_report = json.loads(first), json.loads(second)
        del first_report["elapsed_ms"]
        del second_report["elapsed_ms"]
        self.assertEqual(first_report, second_report)

    def test_cl_no_cache_writes_nothing(self):
        run_main(["bound", "--dim", "2", "--order", "2", "--no-cache"])
        self.assertEqual(os.listdir(self.cache_dir), [])

    def test_cl_sweep_order_three(self):
        status, out = run_main(
            ["sweep", "--dim", "2", "--order", "3", "--budget", "4", "--format", "json", "--no-cache", "--threads", "2"]
        )
        self.assertEqual(status, 0)
        body = json.loads(out)
        self.assertEqual(body["candidates"][0]["weights"], [6, 2, 1])
        self.assertLessEqual(body["best"]["threshold"], 14)

    def test_cl_threads_deterministic(self):
        def cells(threads):
            status, out = run_main(
                ["table", "--dim", "3", "--order", "4", "--format", "json", "--no-cache", "--threads", threads]
            )
            self.assertEqual(status, 0)
            body = json.loads(out)
            for cell in body["cells"]:
                del cell["elapsed_ms"]
            return body

        self.assertEqual(cells("1"), cells("2"))
