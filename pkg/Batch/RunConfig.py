from cli_helpers.build_response import FORMATS
from Geometry.GeometrySpec import GeometrySpec
from Morse.WeightVector import WeightVector

COMMANDS = ("bound", "table", "poly", "sweep", "verify")

# The threshold table covers 2 <= n <= k <= TABLE_LIMIT.
TABLE_LIMIT = 5


class RunConfig(object):
    """
    Everything one command invocation needs: what to compute, how to print
    it and where to cache it. Configuration values fill in whatever the
    command line leaves unset.
    """

    def __init__(
        self,
        command=None,
        n=None,
        k=None,
        geometry="log",
        weights=None,
        response_format="text",
        cache_dir=None,
        cache_enabled=True,
        sweep_budget=40,
        sweep_max_total=None,
        threads=None,
        integrated=False
    ):
        if command not in COMMANDS:
            raise ValueError("Unknown command {}; expected one of {}".format(command, COMMANDS))
        if response_format not in FORMATS:
            raise ValueError("Unknown format {}; expected one of {}".format(response_format, FORMATS))

        for name, value in (("dim", n), ("order", k), ("threads", threads),
                            ("sweep budget", sweep_budget), ("sweep max total", sweep_max_total)):
            if value is not None and (not isinstance(value, int) or isinstance(value, bool)):
                raise TypeError("{} must be an integer; received {}".format(name, value))

        if command in ("bound", "poly", "sweep"):
            if n is None or k is None:
                raise ValueError("The {} command needs --dim and --order".format(command))
        if command in ("bound", "table") and n is not None and n < 2:
            raise ValueError("The {} command needs a dimension of at least 2; received {}".format(command, n))
        if n is not None and n < 1:
            raise ValueError("The dimension must be positive; received {}".format(n))
        if k is not None and k < 1:
            raise ValueError("The order must be positive; received {}".format(k))
        if threads is not None and threads < 1:
            raise ValueError("At least one worker is needed; received {}".format(threads))
        if sweep_budget is not None and sweep_budget < 1:
            raise ValueError("The sweep budget must be at least 1; received {}".format(sweep_budget))
        if sweep_max_total is not None and sweep_max_total < 1:
            raise ValueError("The sweep max total must be at least 1; received {}".format(sweep_max_total))

        self.command = command
        self.n = n
        self.k = k
        self.geometry = GeometrySpec(geometry, n or 2).kind
        self.weights = None
        if weights is not None:
            if command in ("table", "verify"):
                raise ValueError("The {} command does not take weights".format(command))
            self.weights = weights if isinstance(weights, WeightVector) else WeightVector(weights)
            if self.weights.k != k:
                raise ValueError("Expected {} weights for order {}; received {}".format(k, k, self.weights.k))
            if not self.weights.is_admissible():
                raise ValueError("Weights ({}) are not admissible".format(self.weights.dumps()))
        self.response_format = response_format
        self.cache_dir = cache_dir
        self.cache_enabled = bool(cache_enabled)
        self.sweep_budget = sweep_budget
        self.sweep_max_total = sweep_max_total
        self.threads = threads
        self.integrated = bool(integrated)

    @property
    def effective_weights(self):
        return self.weights or WeightVector.default(self.k)

    def table_cells(self):
        """(n, k) pairs with 2 <= n <= k <= limit; --dim/--order lower the limits."""
        max_n = self.n or TABLE_LIMIT
        max_k = self.k or TABLE_LIMIT
        return [(n, k) for n in range(2, max_n + 1) for k in range(n, max_k + 1)]

    def to_dict(self):
        return {
            "command": self.command,
            "dim": self.n,
            "order": self.k,
            "geometry": self.geometry,
            "weights": list(self.weights.a) if self.weights else None,
            "format": self.response_format,
            "cache_dir": self.cache_dir,
            "cache_enabled": self.cache_enabled,
            "sweep_budget": self.sweep_budget,
            "sweep_max_total": self.sweep_max_total,
            "threads": self.threads,
            "integrated": self.integrated
        }

    def __repr__(self):
        return "<RunConfig {}>".format(self.to_dict())
