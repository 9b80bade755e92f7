import csv
import io
import json
import logging
from unittest import TestCase

from jsonschema import ValidationError

from cli_helpers.build_response import (
    EXIT_INTERNAL, EXIT_INVALID, EXIT_OK, Response, build_response, validate_report
)
from cli_helpers.check_kwargs import check_kwargs
from cli_helpers.ErrorHandler import ErrorHandler


class TestHelpers(TestCase):
    def setUp(self):
        logging.disable(logging.CRITICAL)

    def test_he_br_response(self):
        r = build_response(
            0,
            "String response",
            response_format="json"
        )
        self.assertIsInstance(r, Response)
        self.assertIs(r.status, 0)
        self.assertEqual(r.mimetype, "application/json")
        self.assertEqual(json.loads(r.body), {"result": "String response"})
        self.assertFalse(r.error)

    def test_he_br_text_string(self):
        r = build_response(response_data="plain words", response_format="text")
        self.assertEqual(r.body, "plain words")
        self.assertEqual(r.status, EXIT_OK)

    def test_he_br_jsondata(self):
        r = build_response(
            0,
            {"foo": "bar", "value": 100, "torf": False}
        )
        self.assertEqual(json.loads(r.body)["value"], 100)

    def test_he_br_text_dict(self):
        r = build_response(0, {"dim": 2, "threshold": None}, response_format="text")
        self.assertEqual(r.body.splitlines(), ["dim      : 2", "threshold: -"])

    def test_he_br_csv_rows(self):
        rows = [{"dim": 2, "order": 2, "threshold": 15}, {"dim": 3, "order": 2, "threshold": None}]
        r = build_response(0, rows, response_format="csv", columns=["dim", "order", "threshold"])
        self.assertEqual(r.mimetype, "text/csv")
        parsed = list(csv.reader(io.StringIO(r.body)))
        self.assertEqual(parsed[0], ["dim", "order", "threshold"])
        self.assertEqual(parsed[1], ["2", "2", "15"])
        self.assertEqual(len(parsed), 3)

    def test_he_br_text_rows_aligned(self):
        rows = [{"dim": 2, "threshold": 15}, {"dim": 10, "threshold": 1154}]
        lines = build_response(0, rows, response_format="text", columns=["dim", "threshold"]).body.splitlines()
        self.assertEqual(len(lines), 3)
        self.assertEqual(len({len(line) for line in lines}), 1)

    def test_he_br_bad_jsondata(self):
        with self.assertRaises(TypeError):
            build_response(
                0,
                {"foo": build_response(0, "test"), "value": 100, "torf": False}
            )

    def test_he_br_bad_status(self):
        with self.assertRaises(TypeError):
            build_response({"status": 0})
        with self.assertRaises(TypeError):
            build_response(True)

    def test_he_br_low_status(self):
        with self.assertRaises(ValueError):
            build_response(-1)

    def test_he_br_bad_format(self):
        with self.assertRaises(ValueError):
            build_response(0, {"a": 1}, response_format="yaml")

    def test_he_validate_report(self):
        report = {
            "dim": 2, "order": 2, "geometry": "log", "weights": [2, 1], "total_dim": 4,
            "polynomial": ["0", "-1", "3"], "leading_coeff": "3", "threshold": 2, "elapsed_ms": 0
        }
        self.assertEqual(validate_report(report), report)
        report["threshold"] = 0
        with self.assertRaises(ValidationError):
            validate_report(report)

    def test_he_kw_check_kwargs(self):
        self.assertTrue(check_kwargs(
            parameter_list=["a", "b", "c"],
            caller="test_check_kwargs",
            **{"a": 1, "b": 2, "c": 3}
        ))

    def test_he_kw_empty_kwargs(self):
        self.assertTrue(check_kwargs(
            parameter_list=["a", "b", "c"],
            caller="test_check_kwargs",
            **{}
        ))

    def test_he_kw_no_params(self):
        with self.assertRaises(ValueError):
            check_kwargs(
                parameter_list=[],
                caller="test_kw_bad_args",
                **{"x": 2}
            )

    def test_he_kw_bad_args(self):
        with self.assertRaises(TypeError):
            check_kwargs(
                parameter_list=["a", "b"],
                caller="test_kw_bad_args",
                **{"x": 2}
            )

    def test_he_eh_init(self):
        eh = ErrorHandler(
            module="test_he",
            method="test_he_eh_init",
            level=logging.ERROR
        )
        self.assertIsInstance(eh, ErrorHandler)

    def test_he_bad_module(self):
        with self.assertRaises(TypeError):
            ErrorHandler(
                module=-2,
                method="test_he_eh_init",
                level=10
            )

    def test_he_bad_method(self):
        with self.assertRaises(TypeError):
            ErrorHandler(
                module="test_he",
                method=10,
                level=10
            )

    def test_he_check_error(self):
        eh = ErrorHandler(
            module="TEST",
            method="TEST-METHOD",
            level=logging.INFO
        )
        message = "Message for testing purposes only"
        exception = "IGNORE Testing"
        r = eh.error(status=EXIT_INVALID, message=message, exception=exception)
        r_data = json.loads(r.body)
        self.assertEqual(r.status, EXIT_INVALID)
        self.assertTrue(r.error)
        self.assertEqual(r_data["status"], EXIT_INVALID)
        self.assertEqual(r_data["message"], message)
        self.assertEqual(r_data["exception"], exception)
        self.assertEqual(r_data["module"], "TEST")

    def test_he_failure(self):
        eh = ErrorHandler(module="TEST", method="TEST-METHOD", level=logging.INFO)
        r = eh.failure(ValueError("weights (1,1) are not admissible"))
        self.assertEqual(r.status, EXIT_INVALID)
        self.assertEqual(json.loads(r.body)["exception"], "ValueError")
        r = eh.failure(ArithmeticError("singular system"), method="solve")
        self.assertEqual(r.status, EXIT_INTERNAL)
        self.assertEqual(json.loads(r.body)["method"], "solve")

    def test_he_error_without_status(self):
        eh = ErrorHandler(module="TEST", method="TEST-METHOD", level=logging.INFO)
        r = eh.error(message="no status")
        self.assertEqual(r.status, 1)
        self.assertEqual(json.loads(r.body)["status"], "NA")

    def test_he_value_error(self):
        eh2 = ErrorHandler(
            module="TEST",
            method="TEST-METHOD",
            level="logging.INFO"
        )
        self.assertEqual(eh2.logger.level, logging.INFO)

    def test_he_type_error(self):
        eh = ErrorHandler(
            module="TEST",
            method="TEST-METHOD",
            level={"foobar": "logging.INFO"}
        )
        self.assertEqual(eh.logger.level, logging.INFO)

    def test_he_check_warn(self):
        eh = ErrorHandler(
            module="TEST",
            method="TEST-METHOD",
            level=logging.ERROR
        )
        message = "Message for testing purposes only"
        eh.log(
            status=EXIT_INVALID,
            message=message,
            logger=logging.warning
        )

    def test_he_bad_log_keyword(self):
        eh = ErrorHandler(module="TEST", method="TEST-METHOD", level=logging.ERROR)
        with self.assertRaises(TypeError):
            eh.log(message="x", colour="red")

    def tearDown(self):
        logging.disable(logging.NOTSET)
