import functools
import re
from collections import namedtuple

from sympy import ZZ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyRing

# One ring variable: its position in the table ordering and its printed name.
VariableId = namedtuple("VariableId", ["index", "name"])

# Global ordering of the variable families: u_1..u_k, c_1..c_r, h, d, a_1..a_k.
_FAMILY_RANK = {"u": 0, "c": 1, "h": 2, "d": 3, "a": 4}
_NAME_PATTERN = re.compile(r"^([a-z]+)(\d*)$")


def _canonical_key(name):
    match = _NAME_PATTERN.match(name)
    if not match:
        return (len(_FAMILY_RANK), name, 0)
    family, number = match.groups()
    return (_FAMILY_RANK.get(family, len(_FAMILY_RANK)), family, int(number or 0))


class VariableTable(object):
    """
    Binds variable names to VariableIds and owns the SymPy sparse integer ring
    over those variables, ordered graded-lexicographically. Tables with the
    same names share one ring, so polynomials built from equal tables mix
    freely.
    """

    def __init__(self, names):
        if not names:
            raise ValueError("A variable table needs at least one variable")
        _names = tuple(str(name) for name in names)
        if len(set(_names)) != len(_names):
            raise ValueError("Duplicate variable names in {}".format(_names))
        for name in _names:
            if not _NAME_PATTERN.match(name):
                raise ValueError("Invalid variable name: {}".format(name))
        self._names = _names
        self._ring = PolyRing(",".join(_names), ZZ, grlex)
        self._positions = {name: i for i, name in enumerate(_names)}

    #
    # Factories
    #
    @classmethod
    def for_tower(cls, n, k, symbolic_weights=False):
        names = ["u{}".format(j) for j in range(1, k + 1)] \
            + ["c{}".format(l) for l in range(1, n + 1)] \
            + ["h", "d"]
        if symbolic_weights:
            names += ["a{}".format(j) for j in range(1, k + 1)]
        return _cached_table(tuple(names))

    @classmethod
    def for_names(cls, names):
        return _cached_table(tuple(sorted(set(names), key=_canonical_key)))

    def union(self, other):
        if other is self or other.names == self.names:
            return self
        return VariableTable.for_names(self.names + other.names)

    #
    # Properties
    #
    @property
    def names(self):
        return self._names

    @property
    def ring(self):
        return self._ring

    @property
    def arity(self):
        return len(self._names)

    #
    # 'public' methods
    #
    def variable(self, v):
        index = self.index(v)
        return VariableId(index=index, name=self._names[index])

    def index(self, v):
        """Resolve a VariableId, an integer index or a name to an index of this table."""
        if isinstance(v, VariableId):
            if v.index >= self.arity or self._names[v.index] != v.name:
                return self.index(v.name)
            return v.index
        if isinstance(v, int) and not isinstance(v, bool):
            if v < 0 or v >= self.arity:
                raise ValueError("Variable index {} outside arity {}".format(v, self.arity))
            return v
        if isinstance(v, str):
            try:
                return self._positions[v]
            except KeyError:
                raise ValueError("Unknown variable {} (table has {})".format(v, ", ".join(self._names)))
        raise TypeError("Expected a VariableId, an int or a str; received {}".format(type(v)))

    def has(self, name):
        return name in self._positions

    def family(self, name):
        """Return the family letter (u, c, h, d, a) of a variable name."""
        return _NAME_PATTERN.match(name).group(1)

    def level(self, name):
        """Return the numeric suffix of a variable name (u3 -> 3, h -> 0)."""
        return int(_NAME_PATTERN.match(name).group(2) or 0)

    def __eq__(self, other):
        return isinstance(other, VariableTable) and other.names == self.names

    def __hash__(self):
        return hash(self._names)

    def __repr__(self):
        return "<VariableTable: {}>".format(", ".join(self._names))


@functools.lru_cache(maxsize=None)
def _cached_table(names):
    return VariableTable(names)


_TABLES_BY_RING = {}


def table_of_ring(ring):
    """The VariableTable owning a SymPy ring built by this module."""
    table = _TABLES_BY_RING.get(ring)
    if table is None:
        table = _TABLES_BY_RING[ring] = _cached_table(tuple(str(s) for s in ring.symbols))
    return table
