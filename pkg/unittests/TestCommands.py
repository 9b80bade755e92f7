import argparse
import contextlib
import csv
import io
import json
import logging
from unittest import TestCase

from jetbound import error_handler
from cli_controllers import BoundController
from cli_controllers.SweepController import SweepController, best_report
from cli_helpers.build_response import EXIT_INVALID, EXIT_NO_THRESHOLD, EXIT_OK
from Batch.RunConfig import RunConfig
from Commands.Application import build_parser, main
from Commands.CommandSet import CommandSet
from Geometry.EvaluatedClass import EvaluatedClass
from Morse.MorseReport import MorseReport
from Morse.WeightVector import WeightVector

_FAST = ["--no-cache", "--threads", "1"]


def run_main(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        status = main(argv)
    return status, out.getvalue(), err.getvalue()


def report_with(threshold, weights):
    leading = 1 if threshold is not None else 0
    return MorseReport(
        n=2, k=2, geometry="log", weights=WeightVector(weights),
        morse_poly=EvaluatedClass.from_coefficients([0, 0, 0, leading]),
        leading_coeff=leading, threshold=threshold
    )


class TestCommands(TestCase):
    def setUp(self):
        logging.disable(logging.CRITICAL)

    def tearDown(self):
        logging.disable(logging.NOTSET)

    def test_cm_command_set_errors(self):
        with self.assertRaises(TypeError):
            CommandSet(error_handler=None, parser=argparse.ArgumentParser())
        with self.assertRaises(ValueError):
            CommandSet(error_handler=error_handler, parser=None)
        commands = CommandSet(error_handler=error_handler, parser=argparse.ArgumentParser())
        with self.assertRaises(ValueError):
            commands.bound(controller=None)

    def test_cm_parser(self):
        args = build_parser().parse_args(["bound", "--dim", "2", "--order", "3", "--format", "json"])
        self.assertEqual(args.command, "bound")
        self.assertIs(args.controller, BoundController)
        self.assertEqual((args.dim, args.order, args.geometry, args.response_format), (2, 3, "log", "json"))

    def test_cm_missing_command(self):
        with contextlib.redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit):
                build_parser().parse_args([])

    def test_cm_dry_run(self):
        status, out, _ = run_main(["--dry-run", "bound", "--dim", "2", "--order", "2"])
        self.assertEqual(status, EXIT_OK)
        self.assertIn("'command': 'bound'", out)

    def test_cm_inadmissible_weights(self):
        status, out, err = run_main(["bound", "--dim", "2", "--order", "2", "--weights", "1,1"] + _FAST)
        self.assertEqual(status, EXIT_INVALID)
        self.assertEqual(out, "")
        self.assertEqual(json.loads(err)["status"], EXIT_INVALID)

    def test_cm_zero_values_rejected(self):
        for extra in (["--budget", "0"], ["--max-total", "0"], ["--threads", "0"]):
            status, out, err = run_main(["sweep", "--dim", "2", "--order", "2", "--no-cache"] + extra)
            self.assertEqual(status, EXIT_INVALID, extra)
            self.assertEqual(out, "")
            self.assertEqual(json.loads(err)["exception"], "ValueError")

    def test_cm_bound_json(self):
        status, out, _ = run_main(["bound", "--dim", "2", "--order", "2", "--format", "json"] + _FAST)
        self.assertEqual(status, EXIT_OK)
        report = json.loads(out)
        self.assertEqual(report["threshold"], 15)
        self.assertEqual(report["total_dim"], 4)
        self.assertEqual(report["weights"], [2, 1])

    def test_cm_bound_text(self):
        status, out, _ = run_main(["bound", "--dim", "2", "--order", "2"] + _FAST)
        self.assertEqual(status, EXIT_OK)
        self.assertIn("threshold", out)
        self.assertIn("15", out)

    def test_cm_no_threshold(self):
        status, out, _ = run_main(["bound", "--dim", "3", "--order", "2", "--format", "json"] + _FAST)
        self.assertEqual(status, EXIT_NO_THRESHOLD)
        self.assertIsNone(json.loads(out)["threshold"])

    def test_cm_poly_csv(self):
        status, out, _ = run_main(["poly", "--dim", "2", "--order", "2", "--format", "csv"] + _FAST)
        self.assertEqual(status, EXIT_OK)
        rows = list(csv.reader(io.StringIO(out)))
        self.assertEqual(rows[0], ["degree", "coefficient"])
        self.assertEqual([int(row[0]) for row in rows[1:]], list(range(len(rows) - 1)))
        self.assertLessEqual(len(rows) - 1, 4)

    def test_cm_poly_integrated(self):
        status, out, _ = run_main(
            ["poly", "--dim", "2", "--order", "2", "--format", "json", "--integrated"] + _FAST
        )
        self.assertEqual(status, EXIT_OK)
        body = json.loads(out)
        self.assertIn("c1", body["integrated"])
        self.assertNotIn("u1", body["integrated"])

    def test_cm_table_small(self):
        status, out, _ = run_main(["table", "--dim", "2", "--order", "3", "--format", "json"] + _FAST)
        self.assertEqual(status, EXIT_OK)
        body = json.loads(out)
        self.assertEqual(body["geometry"], "log")
        self.assertEqual([(c["dim"], c["order"], c["threshold"]) for c in body["cells"]], [(2, 2, 15), (2, 3, 14)])

    def test_cm_sweep_candidates(self):
        cfg = RunConfig(command="sweep", n=2, k=2, sweep_budget=3)
        self.assertEqual([c.a for c in SweepController().candidates(cfg)], [(2, 1), (3, 1), (4, 1)])
        cfg = RunConfig(command="sweep", n=2, k=2, sweep_budget=40, sweep_max_total=5)
        self.assertEqual(len(SweepController().candidates(cfg)), 3)

    def test_cm_best_report(self):
        reports = [report_with(None, (2, 1)), report_with(9, (5, 1)), report_with(9, (3, 1)), report_with(12, (4, 1))]
        self.assertEqual(best_report(reports).weights, WeightVector((3, 1)))
        self.assertIsNone(best_report(reports[:1]))

    def test_cm_sweep(self):
        status, out, _ = run_main(
            ["sweep", "--dim", "2", "--order", "2", "--budget", "3", "--format", "json"] + _FAST
        )
        self.assertEqual(status, EXIT_OK)
        body = json.loads(out)
        self.assertEqual(body["evaluated"], 3)
        self.assertLessEqual(body["best"]["threshold"], 15)

    def test_cm_verify(self):
        status, out, _ = run_main(["verify", "--dim", "2", "--format", "json", "--no-cache"])
        self.assertEqual(status, EXIT_OK)
        body = json.loads(out)
        self.assertTrue(body["passed"])
        self.assertEqual(body["failures"], [])
