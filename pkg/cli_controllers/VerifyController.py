import logging

from cli_controllers.CommandController import CommandController
from cli_helpers.build_response import build_response, EXIT_OK, EXIT_INTERNAL
from Morse.LemmaSuite import LemmaSuite

COLUMNS = ["check", "dim", "cases", "failed", "status"]


class VerifyController(CommandController):
    """verify: run the lemma suites up to dimension 3 (or --dim) and print the pass/fail matrix."""

    def execute(self, cfg):
        self.handler.method = "execute"
        suite = LemmaSuite(max_dim=cfg.n or 3)
        results = suite.run()
        summary = LemmaSuite.summary(results)
        passed = LemmaSuite.all_passed(results)
        status = EXIT_OK if passed else EXIT_INTERNAL
        self.handler.log(
            message="Lemma suites {}".format("passed" if passed else "FAILED"),
            logger=logging.info if passed else logging.error
        )

        if cfg.response_format == "json":
            response_data = {
                "passed": passed,
                "summary": summary,
                "failures": [r._asdict() for r in results if not r.passed]
            }
            return build_response(exit_status=status, response_data=response_data, response_format="json")
        return build_response(
            exit_status=status,
            response_data=summary,
            response_format=cfg.response_format,
            columns=COLUMNS
        )
