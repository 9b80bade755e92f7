import json

from jsonschema import ValidationError

from cli_helpers.build_response import validate_report
from Geometry.EvaluatedClass import EvaluatedClass
from Geometry.GeometrySpec import GeometrySpec
from Morse.WeightVector import WeightVector


class MorseReport(object):
    """
    The outcome of one pipeline run: the Morse polynomial P(d), its d^(n+1)
    coefficient and the degree threshold (None when that coefficient is not
    positive). Reports dump to a stable JSON object whose polynomial is the
    ascending coefficient list as decimal strings.
    """

    FIELDS = [
        "dim", "order", "geometry", "weights", "total_dim",
        "polynomial", "leading_coeff", "threshold", "elapsed_ms"
    ]

    def __init__(
        self,
        n=None,
        k=None,
        geometry=None,
        weights=None,
        morse_poly=None,
        leading_coeff=None,
        threshold=None,
        elapsed_ms=0
    ):
        if not isinstance(weights, WeightVector):
            raise TypeError("weights must be a WeightVector")
        if not isinstance(morse_poly, EvaluatedClass):
            raise TypeError("morse_poly must be an EvaluatedClass")
        if (threshold is not None) != (leading_coeff is not None and leading_coeff > 0):
            raise ValueError(
                "A threshold is reported exactly when the leading coefficient ({}) is positive".format(leading_coeff)
            )
        self._n = n
        self._k = k
        self._geometry = GeometrySpec(geometry, n).kind
        self._weights = weights
        self._morse_poly = morse_poly
        self._leading_coeff = leading_coeff
        self._threshold = threshold
        self._elapsed_ms = int(elapsed_ms)

    #
    # Properties
    #
    @property
    def n(self):
        return self._n

    @property
    def k(self):
        return self._k

    @property
    def geometry(self):
        return self._geometry

    @property
    def weights(self):
        return self._weights

    @property
    def total_dim(self):
        return self._n + self._k * (self._n - 1)

    @property
    def morse_poly(self):
        return self._morse_poly

    @property
    def leading_coeff(self):
        return self._leading_coeff

    @property
    def threshold(self):
        return self._threshold

    @property
    def elapsed_ms(self):
        return self._elapsed_ms

    @elapsed_ms.setter
    def elapsed_ms(self, value):
        self._elapsed_ms = int(value)

    @property
    def has_threshold(self):
        return self._threshold is not None

    #
    # Serialization
    #
    def to_dict(self, include_elapsed=True):
        report = {
            "dim": self._n,
            "order": self._k,
            "geometry": self._geometry,
            "weights": list(self._weights.a),
            "total_dim": self.total_dim,
            "polynomial": [str(c) for c in self._morse_poly.coefficients],
            "leading_coeff": str(self._leading_coeff),
            "threshold": self._threshold,
            "elapsed_ms": self._elapsed_ms
        }
        if not include_elapsed:
            del report["elapsed_ms"]
        return report

    def dump(self, include_elapsed=True):
        if include_elapsed:
            validate_report(self.to_dict())
        return json.dumps(self.to_dict(include_elapsed=include_elapsed))

    def content(self):
        """The report without its timing, which is all a cache hit must reproduce."""
        return self.dump(include_elapsed=False)

    @classmethod
    def load(cls, jsonstr=None):
        if jsonstr is None:
            raise ValueError("No report JSON was provided")
        if isinstance(jsonstr, dict):
            report = jsonstr
        else:
            try:
                report = json.loads(jsonstr)
            except ValueError as ve:
                raise ValueError("The report is not valid JSON: {}".format(str(ve)))
        try:
            validate_report(report)
        except ValidationError as ve:
            raise ValueError("The report does not match the report schema: {}".format(ve.message))

        n, k = report["dim"], report["order"]
        if report["total_dim"] != n + k * (n - 1):
            raise ValueError("total_dim {} does not match dim {} and order {}".format(report["total_dim"], n, k))
        return cls(
            n=n,
            k=k,
            geometry=report["geometry"],
            weights=WeightVector(report["weights"]),
            morse_poly=EvaluatedClass.from_coefficients([int(c) for c in report["polynomial"]]),
            leading_coeff=int(report["leading_coeff"]),
            threshold=report["threshold"],
            elapsed_ms=report["elapsed_ms"]
        )

    def __repr__(self):
        return "<MorseReport n={} k={} {} a=({}) threshold={}>".format(
            self._n, self._k, self._geometry, self._weights.dumps(), self._threshold
        )
