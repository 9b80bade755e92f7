import logging

from Batch.BatchRunner import Job
from cli_controllers.CommandController import CommandController
from cli_helpers.build_response import build_response, EXIT_OK, EXIT_NO_THRESHOLD
from Morse.WeightVector import admissible_weights, minimal_total

COLUMNS = ["weights", "total", "threshold"]

# Largest |a| enumerated, as a multiple of the smallest admissible |a|.
DEFAULT_TOTAL_FACTOR = 8


def best_report(reports):
    """Smallest threshold; ties go to the smaller |a|, then to the lexicographically smaller a."""
    found = [r for r in reports if r.has_threshold]
    if not found:
        return None
    return min(found, key=lambda r: (r.threshold, r.weights.sort_key))


class SweepController(CommandController):
    """sweep: search admissible weights, in |a| then lexicographic order, for the lowest threshold."""

    def candidates(self, cfg):
        max_total = cfg.sweep_max_total or DEFAULT_TOTAL_FACTOR * minimal_total(cfg.k)
        return admissible_weights(cfg.k, max_total)[:cfg.sweep_budget]

    def execute(self, cfg):
        self.handler.method = "execute"
        candidates = self.candidates(cfg)
        if not candidates:
            raise ValueError("No admissible weights of order {} within the sweep bounds".format(cfg.k))
        jobs = [Job(n=cfg.n, k=cfg.k, geometry=cfg.geometry, weights=a.a) for a in candidates]
        reports = self.runner(cfg).run(jobs)
        best = best_report(reports)
        self.handler.log(
            message="Sweep over {} candidates: best {}".format(len(reports), best),
            logger=logging.info
        )

        rows = [
            {"weights": list(r.weights.a), "total": r.weights.total, "threshold": r.threshold}
            for r in reports
        ]
        status = EXIT_OK if best is not None else EXIT_NO_THRESHOLD
        if cfg.response_format == "json":
            response_data = {
                "evaluated": len(reports),
                "best": best.to_dict() if best else None,
                "candidates": rows
            }
            return build_response(exit_status=status, response_data=response_data, response_format="json")
        if cfg.response_format == "csv":
            return build_response(exit_status=status, response_data=rows, response_format="csv", columns=COLUMNS)

        table = build_response(response_data=rows, response_format="text", columns=COLUMNS).body
        summary = "best: {} (threshold {})".format(
            best.weights.dumps() if best else "-",
            best.threshold if best else "-"
        )
        return build_response(exit_status=status, response_data="{}\n{}".format(table, summary), response_format="text")
