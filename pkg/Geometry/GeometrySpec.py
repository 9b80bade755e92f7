import logging

from sympy import binomial

from jetbound import error_handler
from PolyRing.Polynomial import Polynomial
from PolyRing.VariableTable import VariableTable
from Geometry.EvaluatedClass import EvaluatedClass


class GeometrySpec(object):
    """
    The base of the tower and its bundle V (rank n):

    * compact: a smooth hypersurface X of degree d in P^(n+1), V = T_X;
      c(T_X) (1 + d h) = (1 + h)^(n+2) and h^n integrates to d.
    * log: P^n with a smooth irreducible divisor D of degree d,
      V = T_{P^n}<D>; c(V) (1 + d h) = (1 + h)^(n+1).

    Chern classes come back as exact polynomials in h and d.
    """
    COMPACT = "compact"
    LOGARITHMIC = "log"

    _ALIASES = {
        "compact": COMPACT,
        "compact_hypersurface": COMPACT,
        "log": LOGARITHMIC,
        "logarithmic": LOGARITHMIC,
        "logarithmic_pair": LOGARITHMIC,
    }

    def __init__(self, kind=None, n=None):
        self.handler = error_handler
        self.handler.module = "GeometrySpec"
        self.handler.method = "__init__"

        if not isinstance(kind, str):
            raise TypeError("Geometry kind must be a str; received {}".format(type(kind)))
        try:
            self._kind = self._ALIASES[kind.lower()]
        except KeyError:
            raise ValueError("Unknown geometry {}; expected one of {}".format(kind, sorted(self._ALIASES)))
        if not isinstance(n, int) or isinstance(n, bool):
            raise TypeError("The base dimension must be an integer")
        if n < 1:
            raise ValueError("The base dimension must be at least 1; received {}".format(n))
        self._n = n
        self._chern_in_d = None

    #
    # Overrides
    #
    def __eq__(self, other):
        return isinstance(other, GeometrySpec) and (other.kind, other.n) == (self._kind, self._n)

    def __hash__(self):
        return hash((self._kind, self._n))

    def __repr__(self):
        return "<GeometrySpec: {} n={}>".format(self._kind, self._n)

    #
    # Properties
    #
    @property
    def kind(self):
        return self._kind

    @property
    def n(self):
        return self._n

    @property
    def ambient_exponent(self):
        """Exponent m in c(V) (1 + d h) = (1 + h)^m."""
        return self._n + 2 if self._kind == self.COMPACT else self._n + 1

    #
    # 'public' methods
    #
    def chern_in_degree(self, j, table=None):
        """The integer polynomial e_j(d) with c_j = e_j(d) h^j; e_0 = 1."""
        if not 0 <= j <= self._n:
            raise ValueError("Chern class index {} outside 0..{}".format(j, self._n))
        _table = table or VariableTable.for_names(["h", "d"])
        return self._series(_table)[j]

    def base_chern(self, j, table=None):
        """c_j of V as a polynomial in h and d, for 1 <= j <= n."""
        if not 1 <= j <= self._n:
            raise ValueError("Chern class index {} outside 1..{}".format(j, self._n))
        _table = table or VariableTable.for_names(["h", "d"])
        return self.chern_in_degree(j, _table) * Polynomial.variable(_table, "h") ** j

    def specialize(self, cls, normalize=True):
        """
        Replace c_j by e_j(d), h by 1 and multiply by d (when normalize).
        Weight variables a_j are left untouched; tower variables are refused
        and cls must be homogeneous of cohomological degree n.
        """
        self.handler.method = "specialize"
        table = cls.table
        residual = sorted(name for name in cls.variables if table.family(name) == "u")
        if residual:
            raise ValueError("Residual tower variables {} in an integrated class".format(residual))
        stray = sorted(
            name for name in cls.variables
            if table.family(name) == "c" and table.level(name) > self._n
        )
        if stray:
            raise ValueError("Chern classes {} exceed the base dimension {}".format(stray, self._n))

        weights = {"h": 1}
        weights.update({"c{}".format(l): l for l in range(1, self._n + 1)})
        degrees = cls.weighted_degrees(weights)
        if degrees and degrees != {self._n}:
            raise ValueError(
                "Expected a class of pure degree {}; found degrees {}".format(self._n, sorted(degrees))
            )

        value = cls
        for l in range(1, self._n + 1):
            name = "c{}".format(l)
            if table.has(name):
                value = value.substitute(name, self.chern_in_degree(l, table))
        if table.has("h"):
            value = value.eval_at_integer("h", 1)
        if normalize:
            value = value * Polynomial.variable(value.table, "d")
        self.handler.log(message="Specialized class to {} terms".format(len(value)), logger=logging.debug)
        return value

    def evaluate_in_degree(self, cls, normalize=True):
        return EvaluatedClass(self.specialize(cls, normalize=normalize))

    def cotangent_sequence_chern(self, j, table=None):
        """
        For the log geometry, c_j(T<D>) rebuilt from c(T*<D>) = c(T*_{P^n}) c(O_D)
        = (1 - h)^(n+1) (1 + d h + (d h)^2 + ...) followed by dualisation.
        """
        if self._kind != self.LOGARITHMIC:
            raise ValueError("The cotangent sequence check applies to the log geometry only")
        if not 1 <= j <= self._n:
            raise ValueError("Chern class index {} outside 1..{}".format(j, self._n))
        _table = table or VariableTable.for_names(["h", "d"])
        h = Polynomial.variable(_table, "h")
        d = Polynomial.variable(_table, "d")
        structure_sheaf = Polynomial.constant(_table, 0)
        for i in range(0, self._n + 1):
            structure_sheaf = structure_sheaf + (d * h) ** i
        total = ((1 - h) ** (self._n + 1) * structure_sheaf).truncate({"h": 1}, self._n)
        return (-1) ** j * total.coeff_of("h", j) * h ** j

    #
    # 'private' methods
    #
    def _series(self, table):
        # Truncated division (1 + h)^m / (1 + d h): e_j = C(m, j) - d e_{j-1}.
        if self._chern_in_d is None or self._chern_in_d[0] != table:
            d = Polynomial.variable(table, "d")
            m = self.ambient_exponent
            series = [Polynomial.constant(table, 1)]
            for j in range(1, self._n + 1):
                series.append(int(binomial(m, j)) - d * series[-1])
            self._chern_in_d = (table, series)
        return self._chern_in_d[1]
