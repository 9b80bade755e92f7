from Batch.BatchRunner import Job
from cli_controllers.CommandController import CommandController
from cli_helpers.build_response import build_response
from Morse.MorseController import MorseController


class PolyController(CommandController):
    """poly: the Morse polynomial P(d) and, on request, the integrated class before evaluation."""

    def execute(self, cfg):
        self.handler.method = "execute"
        weights = cfg.effective_weights
        report = self.runner(cfg).run([Job(n=cfg.n, k=cfg.k, geometry=cfg.geometry, weights=weights.a)])[0]

        integrated = None
        if cfg.integrated:
            controller = MorseController(n=cfg.n, k=cfg.k, geometry=cfg.geometry, weights=weights)
            integrated = controller.integrated_class().dumps()

        if cfg.response_format == "csv":
            rows = [
                {"degree": e, "coefficient": str(c)}
                for e, c in enumerate(report.morse_poly.coefficients)
            ]
            return build_response(response_data=rows, response_format="csv", columns=["degree", "coefficient"])

        response_data = {
            "dim": cfg.n,
            "order": cfg.k,
            "geometry": cfg.geometry,
            "weights": list(weights.a),
            "polynomial": report.morse_poly.dumps()
        }
        if cfg.response_format == "json":
            response_data["coefficients"] = [str(c) for c in report.morse_poly.coefficients]
        if integrated is not None:
            response_data["integrated"] = integrated
        return build_response(response_data=response_data, response_format=cfg.response_format)
