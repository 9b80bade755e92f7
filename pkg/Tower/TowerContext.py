from PolyRing.Polynomial import Polynomial
from PolyRing.VariableTable import VariableTable


class TowerContext(object):
    """
    Dimensions of a jet tower X_k over an n-dimensional base with a rank r
    bundle (r = n here), and the variable table binding u_1..u_k, c_1..c_r,
    h, d and, in symbolic-weight mode, a_1..a_k.
    """

    def __init__(self, n=None, k=None, r=None, symbolic_weights=False):
        for name, value in (("n", n), ("k", k)):
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError("{} must be an integer; received {}".format(name, type(value)))
        if n < 1:
            raise ValueError("The base dimension n must be at least 1; received {}".format(n))
        if k < 1:
            raise ValueError("The jet order k must be at least 1; received {}".format(k))
        _r = n if r is None else r
        if _r != n:
            raise ValueError("Only r = n is supported (received n={}, r={})".format(n, r))

        self._n = n
        self._k = k
        self._r = _r
        self._symbolic_weights = bool(symbolic_weights)
        self._table = VariableTable.for_tower(n, k, symbolic_weights=self._symbolic_weights)

    #
    # Overrides
    #
    def __eq__(self, other):
        return isinstance(other, TowerContext) and other.key == self.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return "<TowerContext: n={} r={} k={}{}>".format(
            self._n, self._r, self._k, " symbolic" if self._symbolic_weights else ""
        )

    #
    # Properties
    #
    @property
    def n(self):
        return self._n

    @property
    def r(self):
        return self._r

    @property
    def k(self):
        return self._k

    @property
    def total_dim(self):
        """dim X_k = n + k(r - 1)."""
        return self._n + self._k * (self._r - 1)

    @property
    def symbolic_weights(self):
        return self._symbolic_weights

    @property
    def table(self):
        return self._table

    @property
    def key(self):
        return (self._n, self._r, self._k, self._symbolic_weights)

    @property
    def base_weights(self):
        """Cohomological degree of the base generators: c_l has degree l, h degree 1."""
        weights = {"c{}".format(l): l for l in range(1, self._r + 1)}
        weights["h"] = 1
        return weights

    @property
    def class_weights(self):
        """Cohomological degree of every generator; u_j has degree 1, d and a_j degree 0."""
        weights = self.base_weights
        weights.update({"u{}".format(j): 1 for j in range(1, self._k + 1)})
        return weights

    #
    # Variables
    #
    def u(self, j):
        if not 1 <= j <= self._k:
            raise ValueError("u_{} is outside the tower of order {}".format(j, self._k))
        return self._table.variable("u{}".format(j))

    def c(self, l):
        if not 1 <= l <= self._r:
            raise ValueError("c_{} is outside rank {}".format(l, self._r))
        return self._table.variable("c{}".format(l))

    def a(self, j):
        if not self._symbolic_weights:
            raise ValueError("Weight variables exist only in symbolic-weight mode")
        if not 1 <= j <= self._k:
            raise ValueError("a_{} is outside the tower of order {}".format(j, self._k))
        return self._table.variable("a{}".format(j))

    @property
    def h(self):
        return self._table.variable("h")

    @property
    def d(self):
        return self._table.variable("d")

    def poly(self, v):
        """The polynomial consisting of one variable (a VariableId or a name)."""
        return Polynomial.variable(self._table, v)

    def constant(self, value):
        return Polynomial.constant(self._table, value)
