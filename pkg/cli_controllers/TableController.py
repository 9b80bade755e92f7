import logging

from Batch.BatchRunner import Job
from cli_controllers.CommandController import CommandController
from cli_helpers.build_response import build_response
from Morse.WeightVector import WeightVector

COLUMNS = ["dim", "order", "weights", "leading_coeff", "threshold", "elapsed_ms"]


class TableController(CommandController):
    """table: thresholds for every 2 <= n <= k <= 5 with the default weights."""

    def execute(self, cfg):
        self.handler.method = "execute"
        cells = cfg.table_cells()
        jobs = [
            Job(n=n, k=k, geometry=cfg.geometry, weights=WeightVector.default(k).a)
            for n, k in cells
        ]
        reports = self.runner(cfg).run(jobs)

        rows = []
        for report in reports:
            self.handler.log(
                message="Cell ({}, {}): threshold {}".format(report.n, report.k, report.threshold),
                logger=logging.info
            )
            rows.append({
                "dim": report.n,
                "order": report.k,
                "weights": list(report.weights.a),
                "leading_coeff": str(report.leading_coeff),
                "threshold": report.threshold,
                "elapsed_ms": report.elapsed_ms
            })

        if cfg.response_format == "json":
            response_data = {"geometry": cfg.geometry, "cells": rows}
        else:
            response_data = rows
        return build_response(
            response_data=response_data,
            response_format=cfg.response_format,
            columns=COLUMNS
        )
