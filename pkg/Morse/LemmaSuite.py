import itertools
import logging
from collections import namedtuple

from jetbound import error_handler
from Geometry.GeometrySpec import GeometrySpec
from Morse.MorseController import MorseController, tower_controller
from Morse.WeightVector import WeightVector
from PolyRing.Polynomial import Polynomial
from PolyRing.VariableTable import VariableTable

# One verified statement: which check, on which tower, what was expected and seen.
LemmaResult = namedtuple(
    "LemmaResult",
    ["check", "n", "k", "case", "expected", "observed", "passed"]
)


def exponent_tuples(k, total):
    """All (e_1, ..., e_k) of non-negative integers adding up to total, lexicographically."""
    return [
        e for e in itertools.product(range(total + 1), repeat=k)
        if sum(e) == total
    ]


class LemmaSuite(object):
    """
    Structural checks on the engine, each returning LemmaResult records:

    * first_chern: c_1^[j] = c_1 + (n-1)(u_1 + ... + u_j);
    * vanishing: for k < n every u-monomial of top degree has zero d^(n+1)
      coefficient (compact base);
    * vanishing_twisted: the same against c_1^i on tower level n-i-1;
    * top_monomial: u_1^n ... u_n^n has d^(n+1) coefficient 1 (compact base);
    * existence: k = n with default weights has a positive d^(n+1) coefficient;
    * leading_agreement: the Morse class, F^N and O(a)^N share that coefficient;
    * scaling: doubling the weights multiplies P by 2^N and keeps the threshold;
    * chern_compact and chern_log: the base Chern classes satisfy their
      defining identities.
    """

    CHECKS = (
        "first_chern",
        "vanishing",
        "vanishing_twisted",
        "top_monomial",
        "existence",
        "leading_agreement",
        "scaling",
        "chern_compact",
        "chern_log",
    )

    def __init__(self, max_dim=3, checks=None):
        self.handler = error_handler
        if not isinstance(max_dim, int) or max_dim < 2:
            raise ValueError("The lemma suites need max_dim >= 2; received {}".format(max_dim))
        _checks = tuple(checks) if checks else self.CHECKS
        unknown = sorted(set(_checks) - set(self.CHECKS))
        if unknown:
            raise ValueError("Unknown checks {}; expected some of {}".format(unknown, self.CHECKS))
        self._max_dim = max_dim
        self._checks = _checks

    @property
    def max_dim(self):
        return self._max_dim

    @property
    def checks(self):
        return self._checks

    def run(self):
        self.handler.module = "LemmaSuite"
        self.handler.method = "run"
        results = []
        for check in self._checks:
            for n in range(2, self._max_dim + 1):
                batch = getattr(self, "check_{}".format(check))(n)
                failed = [r for r in batch if not r.passed]
                self.handler.log(
                    message="{} n={}: {} cases, {} failed".format(check, n, len(batch), len(failed)),
                    logger=logging.info if not failed else logging.error
                )
                results.extend(batch)
        return results

    @staticmethod
    def all_passed(results):
        return all(r.passed for r in results)

    @staticmethod
    def summary(results):
        """Rows of (check, n) -> cases, failures, for the pass/fail matrix."""
        rows = {}
        for r in results:
            row = rows.setdefault((r.check, r.n), {"check": r.check, "dim": r.n, "cases": 0, "failed": 0})
            row["cases"] += 1
            row["failed"] += 0 if r.passed else 1
        for row in rows.values():
            row["status"] = "pass" if not row["failed"] else "FAIL"
        return [rows[key] for key in sorted(rows, key=lambda key: (LemmaSuite.CHECKS.index(key[0]), key[1]))]

    #
    # Checks
    #
    def check_first_chern(self, n):
        results = []
        for k in range(1, n + 2):
            tower = tower_controller(n, k)
            ctx = tower.ctx
            for j in range(0, k):
                expected = ctx.poly(ctx.c(1))
                for s in range(1, j + 1):
                    expected = expected + (n - 1) * ctx.poly(ctx.u(s))
                observed = tower.relations.lifted_chern(j, 1)
                results.append(LemmaResult(
                    "first_chern", n, k, "level {}".format(j),
                    expected.dumps(), observed.dumps(), observed == expected
                ))
        return results

    def check_vanishing(self, n):
        results = []
        geometry = GeometrySpec("compact", n)
        for k in range(1, n):
            tower = tower_controller(n, k)
            for e in exponent_tuples(k, tower.ctx.total_dim):
                leading = geometry.evaluate_in_degree(tower.intersect(e)).coefficient(n + 1)
                results.append(LemmaResult("vanishing", n, k, _case(e), 0, leading, leading == 0))
        return results

    def check_vanishing_twisted(self, n):
        results = []
        geometry = GeometrySpec("compact", n)
        for i in range(1, n - 1):
            k = n - i - 1
            tower = tower_controller(n, k)
            ctx = tower.ctx
            extra = ctx.poly(ctx.c(1)) ** i
            for e in exponent_tuples(k, (n - i - 1) * n + 1):
                leading = geometry.evaluate_in_degree(tower.intersect(e, extra)).coefficient(n + 1)
                results.append(LemmaResult(
                    "vanishing_twisted", n, k, "{} c1^{}".format(_case(e), i), 0, leading, leading == 0
                ))
        return results

    def check_top_monomial(self, n):
        geometry = GeometrySpec("compact", n)
        tower = tower_controller(n, n)
        e = (n,) * n
        leading = geometry.evaluate_in_degree(tower.intersect(e)).coefficient(n + 1)
        return [LemmaResult("top_monomial", n, n, _case(e), 1, leading, leading == 1)]

    def check_existence(self, n):
        results = []
        for kind in (GeometrySpec.COMPACT, GeometrySpec.LOGARITHMIC):
            report = MorseController(n=n, k=n, geometry=kind).run()
            results.append(LemmaResult(
                "existence", n, n, kind, "> 0", report.leading_coeff,
                report.leading_coeff > 0 and report.threshold is not None
            ))
        return results

    def check_leading_agreement(self, n):
        results = []
        for kind in (GeometrySpec.COMPACT, GeometrySpec.LOGARITHMIC):
            controller = MorseController(n=n, k=n, geometry=kind)
            morse = controller.morse_polynomial().coefficient(n + 1)
            nef = controller.morse_polynomial(correction=False).coefficient(n + 1)
            own = controller.leading_degree_coefficient()
            results.append(LemmaResult(
                "leading_agreement", n, n, kind, morse, "{}/{}".format(nef, own), morse == nef == own
            ))
        return results

    def check_scaling(self, n):
        weights = WeightVector.default(n)
        base = MorseController(n=n, k=n, geometry="log", weights=weights).run()
        doubled = MorseController(n=n, k=n, geometry="log", weights=weights.scaled(2)).run()
        factor = 2 ** base.total_dim
        scaled = [factor * c for c in base.morse_poly.coefficients]
        return [LemmaResult(
            "scaling", n, n, "a -> 2a", base.threshold, doubled.threshold,
            base.threshold == doubled.threshold and scaled == doubled.morse_poly.coefficients
        )]

    def check_chern_compact(self, n):
        geometry = GeometrySpec("compact", n)
        table = _base_table()
        h = Polynomial.variable(table, "h")
        d = Polynomial.variable(table, "d")
        total = Polynomial.one(table)
        for j in range(1, n + 1):
            total = total + geometry.base_chern(j, table)
        observed = ((1 + d * h) * total).truncate({"h": 1}, n)
        expected = ((1 + h) ** (n + 2)).truncate({"h": 1}, n)
        return [LemmaResult(
            "chern_compact", n, None, "c(T_X)(1+dh)", expected.dumps(), observed.dumps(), observed == expected
        )]

    def check_chern_log(self, n):
        geometry = GeometrySpec("log", n)
        table = _base_table()
        results = []
        for j in range(1, n + 1):
            expected = geometry.base_chern(j, table)
            observed = geometry.cotangent_sequence_chern(j, table)
            results.append(LemmaResult(
                "chern_log", n, None, "c{}".format(j), expected.dumps(), observed.dumps(), observed == expected
            ))
        return results


def _case(exponents):
    return "u^({})".format(",".join(str(e) for e in exponents))


def _base_table():
    return VariableTable.for_names(["h", "d"])
