import functools
import itertools
import logging
import time

from sympy import ZZ, Matrix, Poly, Rational, Symbol, ceiling, floor

from jetbound import error_handler
from Geometry.GeometrySpec import GeometrySpec
from Morse.MorseReport import MorseReport
from Morse.WeightVector import WeightVector, admissible_weights, minimal_total
from PolyRing.Polynomial import Polynomial
from PolyRing.VariableTable import VariableTable
from Tower.TowerContext import TowerContext
from Tower.TowerController import TowerController

STRATEGIES = ("reduced", "listing")

_D = Symbol("d")


@functools.lru_cache(maxsize=None)
def tower_controller(n, k, symbolic_weights=False):
    """One TowerController per (n, k) and process; its residues are memoized."""
    return TowerController(TowerContext(n=n, k=k, symbolic_weights=symbolic_weights))


class MorseController(object):
    """
    Runs the Morse pipeline for one (n, k, geometry, a):

        F = a_1 u_1 + ... + a_k u_k + 2|a| h      (nef)
        G = 2|a| h                                (nef)
        R = (F - N G) F^(N-1),  N = n + k(n - 1)

    R is reduced on the tower, integrated along the fibers and evaluated in
    the degree d, which gives the Morse polynomial P(d). The "reduced"
    strategy multiplies one factor of F at a time, reducing and dropping base
    classes above degree n after each step; "listing" expands R in full and
    reduces once. Both give the same canonical form.
    """

    def __init__(self, n=None, k=None, geometry=None, weights=None, strategy="reduced"):
        self.handler = error_handler
        self.handler.module = "MorseController"
        self.handler.method = "__init__"

        self._tower = tower_controller(n, k)
        self._ctx = self._tower.ctx
        self._geometry = geometry if isinstance(geometry, GeometrySpec) else GeometrySpec(geometry, n)
        if self._geometry.n != n:
            raise ValueError("The geometry is {}-dimensional, the tower base {}".format(self._geometry.n, n))

        if weights is None:
            self._weights = WeightVector.default(k)
        elif isinstance(weights, WeightVector):
            self._weights = weights
        else:
            self._weights = WeightVector(weights)
        if self._weights.k != k:
            raise ValueError("Expected {} weights for order {}; received {}".format(k, k, self._weights.k))
        if not self._weights.is_admissible():
            raise ValueError("Weights ({}) are not admissible".format(self._weights.dumps()))

        if strategy not in STRATEGIES:
            raise ValueError("Unknown strategy {}; expected one of {}".format(strategy, STRATEGIES))
        self._strategy = strategy

        if k == 1:
            self.handler.log(
                message="Order 1 is degenerate: thresholds are reported but carry no jet information",
                logger=logging.warning
            )

    #
    # Properties
    #
    @property
    def ctx(self):
        return self._ctx

    @property
    def geometry(self):
        return self._geometry

    @property
    def weights(self):
        return self._weights

    @property
    def strategy(self):
        return self._strategy

    @property
    def total_dim(self):
        return self._ctx.total_dim

    #
    # 'public' methods
    #
    def nef_class(self):
        return nef_classes(self._ctx, self._weights)[0]

    def twist_class(self):
        return nef_classes(self._ctx, self._weights)[1]

    def morse_class(self):
        return morse_class(self._ctx, self._weights)

    def integrated_class(self, correction=True):
        """
        The base class of R (or of F^N when correction is False) in
        c_1..c_n and h, before evaluation in the degree.
        """
        self.handler.method = "integrated_class"
        F, G = nef_classes(self._ctx, self._weights)
        N = self._ctx.total_dim
        head = F - N * G if correction else F
        if self._strategy == "listing":
            reduced = self._tower.reduce_tower(head * F ** (N - 1))
        else:
            power = self._tower.reduced_power(F, N - 1)
            reduced = self._tower.reduce_tower(head * power, truncate_base=True)
        return self._tower.integrate_fibers(reduced)

    def morse_polynomial(self, correction=True):
        return self._geometry.evaluate_in_degree(self.integrated_class(correction=correction))

    def self_intersection_polynomial(self):
        """P for O(a)^N, the top power of a_1 u_1 + ... + a_k u_k alone."""
        ctx = self._ctx
        line = ctx.constant(0)
        for j, a in enumerate(self._weights, start=1):
            line = line + a * ctx.poly(ctx.u(j))
        reduced = self._tower.reduced_power(line, ctx.total_dim)
        return self._geometry.evaluate_in_degree(self._tower.integrate_fibers(reduced))

    def leading_degree_coefficient(self):
        return self.self_intersection_polynomial().coefficient(self._ctx.n + 1)

    def run(self):
        self.handler.method = "run"
        self.handler.log(
            message="Morse pipeline n={} k={} {} a=({})".format(
                self._ctx.n, self._ctx.k, self._geometry.kind, self._weights.dumps()
            ),
            logger=logging.info
        )
        started = time.perf_counter()
        polynomial = self.morse_polynomial()
        leading = polynomial.coefficient(self._ctx.n + 1)
        threshold = degree_threshold(polynomial) if leading > 0 else None
        elapsed_ms = int((time.perf_counter() - started) * 1000)
        self.handler.log(
            message="n={} k={} {}: leading coefficient {}, threshold {} ({} ms)".format(
                self._ctx.n, self._ctx.k, self._geometry.kind, leading, threshold, elapsed_ms
            ),
            logger=logging.info
        )
        return MorseReport(
            n=self._ctx.n,
            k=self._ctx.k,
            geometry=self._geometry.kind,
            weights=self._weights,
            morse_poly=polynomial,
            leading_coeff=leading,
            threshold=threshold,
            elapsed_ms=elapsed_ms
        )


def nef_classes(ctx, a=None):
    """
    (F, G) on the tower of ctx. With a symbolic-weight context and no
    weights, a_1..a_k stay variables.
    """
    if a is None:
        if not ctx.symbolic_weights:
            raise ValueError("Weights are required outside symbolic-weight mode")
        weights = [ctx.poly(ctx.a(j)) for j in range(1, ctx.k + 1)]
    else:
        _a = a if isinstance(a, WeightVector) else WeightVector(a)
        if _a.k != ctx.k:
            raise ValueError("Expected {} weights; received {}".format(ctx.k, _a.k))
        if not _a.is_admissible():
            raise ValueError("Weights ({}) are not admissible".format(_a.dumps()))
        weights = list(_a.a)

    total = ctx.constant(0)
    F = ctx.constant(0)
    for j, a_j in enumerate(weights, start=1):
        F = F + a_j * ctx.poly(ctx.u(j))
        total = total + a_j
    G = 2 * total * ctx.poly(ctx.h)
    return F + G, G


def morse_class(ctx, a=None):
    """(F - N G) F^(N-1), fully expanded and not reduced."""
    F, G = nef_classes(ctx, a)
    N = ctx.total_dim
    return (F - N * G) * F ** (N - 1)


def morse_polynomial(n, k, a, spec, correction=True):
    return MorseController(n=n, k=k, geometry=spec, weights=a).morse_polynomial(correction=correction)


def self_intersection_polynomial(n, k, a, spec):
    return MorseController(n=n, k=k, geometry=spec, weights=a).self_intersection_polynomial()


def leading_degree_coefficient(n, k, a, spec):
    """The d^(n+1) coefficient of the evaluated O(a)^N."""
    return MorseController(n=n, k=k, geometry=spec, weights=a).leading_degree_coefficient()


def real_root_intervals(coefficients):
    """
    Isolating intervals (a, b) with rational ends, one per distinct real root
    of the polynomial with ascending integer coefficients. The intervals are
    disjoint, increasing and each narrower than 1/2.
    """
    if len(coefficients) < 2:
        return []
    poly = Poly(list(reversed(coefficients)), _D, domain=ZZ)
    return [(a, b) for (a, b), _ in poly.intervals(eps=Rational(1, 2))]


def degree_threshold(P):
    """
    The smallest integer delta >= 1 with P(d) > 0 for every integer d >= delta,
    or None when the leading coefficient of P is not positive.

    P keeps one sign on each gap between isolating intervals and is positive
    above the last one, so only the integers inside an interval and the
    largest integer of each gap are evaluated.
    """
    coefficients = P.coefficients
    if not coefficients or coefficients[-1] <= 0:
        return None
    intervals = real_root_intervals(coefficients)
    for index in range(len(intervals) - 1, -1, -1):
        a, b = intervals[index]
        for d in range(int(ceiling(b)), int(floor(a)) - 1, -1):
            if d < 1:
                return 1
            if P(d) <= 0:
                return d + 1
        d = int(ceiling(a)) - 1
        if d < 1:
            return 1
        if index and d <= intervals[index - 1][1]:
            # no integer between this root and the next one down
            continue
        if P(d) <= 0:
            return d + 1
    return 1


def _weight_monomials(k, degree):
    """Exponent tuples of the degree-homogeneous monomials in a_1..a_k, graded-lex descending."""
    exponents = [
        e for e in itertools.product(range(degree + 1), repeat=k)
        if sum(e) == degree
    ]
    return sorted(exponents, reverse=True)


def _weight_table(k):
    return VariableTable.for_names(["a{}".format(j) for j in range(1, k + 1)])


def leading_form_symbolic(n, k, spec):
    """
    The d^(n+1) coefficient of O(a)^N with a_1..a_k kept as variables: a
    homogeneous polynomial of degree N in the weights. Memory grows quickly;
    meant for n = 2 and small k.
    """
    geometry = spec if isinstance(spec, GeometrySpec) else GeometrySpec(spec, n)
    tower = tower_controller(n, k, symbolic_weights=True)
    ctx = tower.ctx
    line = ctx.constant(0)
    for j in range(1, k + 1):
        line = line + ctx.poly(ctx.a(j)) * ctx.poly(ctx.u(j))
    reduced = tower.reduced_power(line, ctx.total_dim)
    evaluated = geometry.specialize(tower.integrate_fibers(reduced))
    return evaluated.coeff_of("d", n + 1).in_table(_weight_table(k))


def leading_form_interpolated(n, k, spec, samples=None):
    """
    The same form as leading_form_symbolic, recovered by an exact rational
    linear solve over admissible integer weight samples.
    """
    geometry = spec if isinstance(spec, GeometrySpec) else GeometrySpec(spec, n)
    N = n + k * (n - 1)
    monomials = _weight_monomials(k, N)
    wanted = samples or max(15, 2 * len(monomials))
    limit = minimal_total(k)
    candidates = admissible_weights(k, limit)
    while len(candidates) < wanted:
        limit *= 2
        candidates = admissible_weights(k, limit)
    chosen = candidates[:wanted]

    rows, values = [], []
    for a in chosen:
        rows.append([_monomial_value(a.a, e) for e in monomials])
        values.append([leading_degree_coefficient(n, k, a, geometry)])
    try:
        solution, parameters = Matrix(rows).gauss_jordan_solve(Matrix(values))
    except ValueError:
        raise ArithmeticError("The sampled coefficients are not a homogeneous form of degree {}".format(N))
    if parameters.shape[0]:
        raise ArithmeticError("{} samples do not determine the degree {} form".format(len(chosen), N))

    table = _weight_table(k)
    terms = []
    for e, value in zip(monomials, solution):
        if not value.is_integer:
            raise ArithmeticError("Non-integral coefficient {} for monomial {}".format(value, e))
        terms.append((e, int(value)))
    return Polynomial.from_terms(table, terms)


def _monomial_value(a, exponents):
    value = 1
    for x, e in zip(a, exponents):
        value *= x ** e
    return value
