from sympy import Symbol
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import CoercionFailed

from PolyRing.VariableTable import VariableTable, table_of_ring

# degree_in() of the zero polynomial.
DEGREE_OF_ZERO = float("-inf")


class Monomial(object):
    """
    A power product stored sparsely: a sorted tuple of (variable index,
    exponent) pairs, zero exponents never stored.
    """
    __slots__ = ("_pairs",)

    def __init__(self, pairs=()):
        _pairs = tuple(sorted((int(i), int(e)) for i, e in pairs if e))
        for _, e in _pairs:
            if e < 0:
                raise ValueError("Negative exponent in monomial: {}".format(_pairs))
        self._pairs = _pairs

    @classmethod
    def from_dense(cls, exponents):
        return cls((i, e) for i, e in enumerate(exponents) if e)

    @property
    def exponents(self):
        return dict(self._pairs)

    @property
    def degree(self):
        return sum(e for _, e in self._pairs)

    def dense(self, arity):
        exponents = [0] * arity
        for i, e in self._pairs:
            exponents[i] = e
        return tuple(exponents)

    def render(self, names):
        return "*".join(
            names[i] if e == 1 else "{}^{}".format(names[i], e)
            for i, e in self._pairs
        )

    def __eq__(self, other):
        return isinstance(other, Monomial) and other._pairs == self._pairs

    def __hash__(self):
        return hash(self._pairs)

    def __repr__(self):
        return "<Monomial {}>".format(self._pairs)


class Polynomial(object):
    """
    Sparse multivariate polynomial with arbitrary-precision integer
    coefficients.

    A Polynomial wraps a SymPy ``PolyElement`` of the ring owned by a
    VariableTable and is never mutated after construction, so values can be
    shared between workers. Mixing polynomials from two tables lifts both into
    the table holding the union of their variables.

    The text form lists terms in descending graded-lexicographic order,
    e.g. ``u1^2 - 3*c1*h + 2``; ``Polynomial.parse`` reads it back.
    """
    __slots__ = ("_element",)

    def __init__(self, element):
        self._element = element

    #
    # Factories
    #
    @classmethod
    def zero(cls, table):
        return cls(table.ring.zero)

    @classmethod
    def one(cls, table):
        return cls(table.ring.one)

    @classmethod
    def constant(cls, table, value):
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError("Polynomial constants must be integers; received {}".format(type(value)))
        return cls(table.ring.ground_new(value))

    @classmethod
    def variable(cls, table, v):
        return cls(table.ring.gens[table.index(v)])

    @classmethod
    def from_terms(cls, table, terms):
        """Build from an iterable of (Monomial or dense exponent tuple, int)."""
        ring = table.ring
        collected = {}
        for monomial, coeff in terms:
            dense = monomial.dense(table.arity) if isinstance(monomial, Monomial) else tuple(monomial)
            collected[dense] = collected.get(dense, 0) + coeff
        return cls(ring.from_dict({m: c for m, c in collected.items() if c}))

    @classmethod
    def parse(cls, text, table):
        if not isinstance(text, str):
            raise TypeError("Polynomial text must be a str")
        local_dict = {name: Symbol(name) for name in table.names}
        try:
            expr = parse_expr(
                text,
                local_dict=local_dict,
                transformations=standard_transformations + (convert_xor,)
            )
            return cls(table.ring.from_expr(expr))
        except (SyntaxError, TypeError, ValueError, CoercionFailed) as e:
            raise ValueError("Cannot parse polynomial {!r} over {}: {}".format(text, table.names, e))

    #
    # Properties
    #
    @property
    def element(self):
        return self._element

    @property
    def ring(self):
        return self._element.ring

    @property
    def table(self):
        return table_of_ring(self._element.ring)

    @property
    def variables(self):
        """Names of the variables actually occurring."""
        names = self.table.names
        used = set()
        for monom in self._element.keys():
            used.update(names[i] for i, e in enumerate(monom) if e)
        return used

    def is_zero(self):
        return not self._element

    def __len__(self):
        return len(self._element)

    def terms(self):
        """(Monomial, int) pairs, highest graded-lex term first."""
        return [
            (Monomial.from_dense(monom), int(coeff))
            for monom, coeff in self._element.terms(order=grlex)
        ]

    def constant_term(self):
        return int(self._element.get(self.ring.zero_monom, 0))

    #
    # Arithmetic
    #
    def add(self, other):
        a, b = self._unify(other)
        return Polynomial(a + b)

    def mul(self, other):
        a, b = self._unify(other)
        return Polynomial(a * b)

    def pow(self, e):
        if not isinstance(e, int) or isinstance(e, bool):
            raise TypeError("Exponent must be an integer")
        if e < 0:
            raise ValueError("Exponent must be non-negative; received {}".format(e))
        return Polynomial(self._element ** e)

    __add__ = add
    __mul__ = mul
    __pow__ = pow

    def __radd__(self, other):
        return self.add(other)

    def __rmul__(self, other):
        return self.mul(other)

    def __sub__(self, other):
        a, b = self._unify(other)
        return Polynomial(a - b)

    def __rsub__(self, other):
        a, b = self._unify(other)
        return Polynomial(b - a)

    def __neg__(self):
        return Polynomial(-self._element)

    def __eq__(self, other):
        if not isinstance(other, (Polynomial, int)):
            return NotImplemented
        a, b = self._unify(other)
        return a == b

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.dumps())

    #
    # Structural operations
    #
    def degree_in(self, v):
        if not self._element:
            return DEGREE_OF_ZERO
        i = self.table.index(v)
        return max(monom[i] for monom in self._element.keys())

    def split(self, v):
        """Map each exponent e of v to the v-free polynomial multiplying v^e."""
        i = self.table.index(v)
        buckets = {}
        for monom, coeff in self._element.items():
            stripped = monom[:i] + (0,) + monom[i + 1:]
            buckets.setdefault(monom[i], {})[stripped] = coeff
        ring = self.ring
        return {e: Polynomial(ring.from_dict(terms)) for e, terms in buckets.items()}

    @classmethod
    def join(cls, parts, v, table):
        """Inverse of split: sum of parts[e] * v^e."""
        i = table.index(v)
        ring = table.ring
        total = ring.zero
        for e, part in parts.items():
            if part.is_zero():
                continue
            element = part.in_table(table).element
            if e:
                shift = [0] * table.arity
                shift[i] = e
                element = element.mul_monom(tuple(shift))
            total = total + element
        return cls(total)

    def coeff_of(self, v, e):
        i = self.table.index(v)
        terms = {
            monom[:i] + (0,) + monom[i + 1:]: coeff
            for monom, coeff in self._element.items()
            if monom[i] == e
        }
        return Polynomial(self.ring.from_dict(terms))

    def substitute(self, v, q):
        """Replace every occurrence of v by q and expand."""
        a, b = self._unify(q)
        lifted = Polynomial(a)
        table = lifted.table
        parts = lifted.split(v)
        result = table.ring.zero
        power = table.ring.one
        done = 0
        for e in sorted(parts):
            while done < e:
                power = power * b
                done += 1
            result = result + parts[e].element * power
        return Polynomial(result)

    def eval_at_integer(self, v, x):
        """Exact Horner evaluation of v at the integer x; v disappears from the result."""
        if not isinstance(x, int) or isinstance(x, bool):
            raise TypeError("Evaluation point must be an integer")
        parts = self.split(v)
        if not parts:
            return self
        ring = self.ring
        result = ring.zero
        for e in range(max(parts), -1, -1):
            result = result * x
            if e in parts:
                result = result + parts[e].element
        return Polynomial(result)

    def reduce_monic(self, v, rel):
        """
        Remainder of Euclidean division in v by rel, which must be monic in v
        with coefficients free of v. The remainder has degree_in(v) below
        degree_in(rel, v) and is congruent to self modulo rel.
        """
        a, b = self._unify(rel)
        lifted, relation = Polynomial(a), Polynomial(b)
        table = lifted.table
        r = relation.degree_in(v)
        if r == DEGREE_OF_ZERO or r < 1:
            raise ValueError("Relation must have positive degree in {}".format(table.variable(v).name))
        rel_parts = relation.split(v)
        if rel_parts[r] != 1:
            raise ValueError(
                "Relation is not monic in {}: leading coefficient {}".format(
                    table.variable(v).name, rel_parts[r]
                )
            )
        tail = [(l, rel_parts[l].element) for l in range(r) if l in rel_parts]

        parts = {e: p.element for e, p in lifted.split(v).items()}
        top = max(parts) if parts else -1
        for e in range(top, r - 1, -1):
            lead = parts.pop(e, None)
            if not lead:
                continue
            for l, coeff in tail:
                target = e - r + l
                parts[target] = parts.get(target, table.ring.zero) - lead * coeff
        return Polynomial.join({e: Polynomial(p) for e, p in parts.items()}, v, table)

    def truncate(self, weights, bound):
        """Drop every term whose weighted degree exceeds bound; weights maps names to ints."""
        table = self.table
        weight_vector = [weights.get(name, 0) for name in table.names]
        kept = {
            monom: coeff
            for monom, coeff in self._element.items()
            if sum(w * e for w, e in zip(weight_vector, monom)) <= bound
        }
        if len(kept) == len(self._element):
            return self
        return Polynomial(self.ring.from_dict(kept))

    def weighted_degrees(self, weights):
        table = self.table
        weight_vector = [weights.get(name, 0) for name in table.names]
        return {
            sum(w * e for w, e in zip(weight_vector, monom))
            for monom in self._element.keys()
        }

    def univariate_coefficients(self, v):
        """Ascending integer coefficients in v; every other variable must be absent."""
        name = self.table.variable(v).name
        stray = self.variables - {name}
        if stray:
            raise ValueError("Expected a polynomial in {} only; found {}".format(name, sorted(stray)))
        if self.is_zero():
            return []
        parts = self.split(v)
        return [parts[e].constant_term() if e in parts else 0 for e in range(max(parts) + 1)]

    def in_table(self, table):
        """The same polynomial viewed in another (larger) table."""
        if self.ring is table.ring:
            return self
        try:
            return Polynomial(self._element.set_ring(table.ring))
        except (ValueError, CoercionFailed):
            raise ValueError(
                "Variables {} do not fit table {}".format(sorted(self.variables), table.names)
            )

    #
    # Serialization
    #
    def dumps(self):
        if not self._element:
            return "0"
        names = self.table.names
        pieces = []
        for monomial, coeff in self.terms():
            body = monomial.render(names)
            magnitude = abs(coeff)
            if not body:
                text = str(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = "{}*{}".format(magnitude, body)
            if not pieces:
                pieces.append(("-" if coeff < 0 else "") + text)
            else:
                pieces.append(("- " if coeff < 0 else "+ ") + text)
        return " ".join(pieces)

    def __str__(self):
        return self.dumps()

    def __repr__(self):
        return "Polynomial('{}')".format(self.dumps())

    #
    # 'private' methods
    #
    def _unify(self, other):
        if isinstance(other, bool):
            raise TypeError("Booleans are not polynomials")
        if isinstance(other, int):
            return self._element, self.ring.ground_new(other)
        if not isinstance(other, Polynomial):
            raise TypeError("Cannot combine a Polynomial with {}".format(type(other)))
        if other.ring is self.ring:
            return self._element, other._element
        table = self.table.union(other.table)
        return self.in_table(table)._element, other.in_table(table)._element
