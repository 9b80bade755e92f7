import hashlib
import json

from jetbound import ENGINE_VERSION


class CacheEntry(object):
    """
    A cached report: the content hash of the run's identity and the report
    JSON. The identity is (dim, order, geometry, weights, engine version) so
    an engine change retires every earlier entry.
    """

    def __init__(self, dim=None, order=None, geometry=None, weights=None, value=None):
        if not isinstance(dim, int) or not isinstance(order, int):
            raise TypeError("dim and order must be integers")
        if not isinstance(geometry, str):
            raise TypeError("geometry must be a str")
        if weights is None:
            raise ValueError("A cache entry needs the weight vector")
        self._identity = {
            "dim": dim,
            "order": order,
            "geometry": geometry,
            "weights": [int(a) for a in weights],
            "engine": ENGINE_VERSION
        }
        self._value = value

    @classmethod
    def for_report(cls, report):
        return cls(
            dim=report.n,
            order=report.k,
            geometry=report.geometry,
            weights=list(report.weights.a),
            value=report.dump()
        )

    @property
    def identity(self):
        return dict(self._identity)

    @property
    def key(self):
        canonical = json.dumps(self._identity, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    @property
    def value(self):
        return self._value

    @value.setter
    def value(self, value):
        if value is not None and not isinstance(value, str):
            raise TypeError("A cache value is the report JSON string")
        self._value = value

    def __repr__(self):
        return "<CacheEntry {} {}>".format(self.key[:12], self._identity)
