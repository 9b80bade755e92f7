from PolyRing.Polynomial import DEGREE_OF_ZERO, Polynomial
from PolyRing.VariableTable import VariableTable


class EvaluatedClass(object):
    """A class evaluated in the degree: a univariate integer polynomial P(d)."""

    def __init__(self, poly_in_d):
        if not isinstance(poly_in_d, Polynomial):
            raise TypeError("EvaluatedClass wraps a Polynomial; received {}".format(type(poly_in_d)))
        self._poly = poly_in_d
        if poly_in_d.table.has("d"):
            coefficients = poly_in_d.univariate_coefficients("d")
        elif poly_in_d.variables:
            raise ValueError("Expected a polynomial in d only; found {}".format(sorted(poly_in_d.variables)))
        else:
            coefficients = [poly_in_d.constant_term()]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        self._coefficients = tuple(coefficients)

    @classmethod
    def from_coefficients(cls, coefficients, table=None):
        _table = table or VariableTable.for_names(["d"])
        position = _table.index("d")
        terms = []
        for e, c in enumerate(coefficients):
            exponents = [0] * _table.arity
            exponents[position] = e
            terms.append((tuple(exponents), int(c)))
        return cls(Polynomial.from_terms(_table, terms))

    @property
    def poly_in_d(self):
        return self._poly

    @property
    def coefficients(self):
        """Ascending coefficients; the zero polynomial has none."""
        return list(self._coefficients)

    @property
    def degree(self):
        return len(self._coefficients) - 1 if self._coefficients else DEGREE_OF_ZERO

    @property
    def leading_coefficient(self):
        return self._coefficients[-1] if self._coefficients else 0

    def coefficient(self, e):
        return self._coefficients[e] if 0 <= e < len(self._coefficients) else 0

    def __call__(self, x):
        value = 0
        for c in reversed(self._coefficients):
            value = value * x + c
        return value

    def __eq__(self, other):
        return isinstance(other, EvaluatedClass) and other.coefficients == self.coefficients

    def __hash__(self):
        return hash(self._coefficients)

    def __repr__(self):
        return "<EvaluatedClass: {}>".format(self.dumps())

    def dumps(self):
        return self._poly.dumps()
