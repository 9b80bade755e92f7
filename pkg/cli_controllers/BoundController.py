from Batch.BatchRunner import Job
from cli_controllers.CommandController import CommandController
from cli_helpers.build_response import build_response, EXIT_OK, EXIT_NO_THRESHOLD


class BoundController(CommandController):
    """bound: the degree threshold of one (n, k, geometry, a)."""

    def execute(self, cfg):
        self.handler.method = "execute"
        weights = cfg.effective_weights
        job = Job(n=cfg.n, k=cfg.k, geometry=cfg.geometry, weights=weights.a)
        report = self.runner(cfg).run([job])[0]

        self.handler.log(message="Bound computed: {}".format(report))
        response_data = report.to_dict()
        if cfg.response_format == "text":
            response_data["polynomial"] = report.morse_poly.dumps()
            response_data["weights"] = weights.dumps()
        return build_response(
            exit_status=EXIT_OK if report.has_threshold else EXIT_NO_THRESHOLD,
            response_data=response_data,
            response_format=cfg.response_format,
            columns=report.FIELDS
        )
