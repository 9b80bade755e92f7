import logging

from jetbound import error_handler
from PolyRing.Polynomial import Polynomial
from Tower.RelationSet import RelationSet


class TowerController(object):
    """
    Reduction to canonical form, integration along the fibers and
    intersection numbers on the tower described by a TowerContext.

    Canonical form: every u_j appears with degree < r. Reduction runs from
    u_k down to u_1; reducing u_j only introduces u_1..u_{j-1}, so a single
    pass suffices.
    """

    def __init__(self, ctx, relations=None):
        self.handler = error_handler
        self.handler.module = "TowerController"
        self.handler.method = "__init__"

        if relations is not None and relations.ctx != ctx:
            raise ValueError("The relation set was built for {}, not {}".format(relations.ctx, ctx))
        self._ctx = ctx
        self._relations = relations or RelationSet(ctx)

    #
    # Properties
    #
    @property
    def ctx(self):
        return self._ctx

    @property
    def relations(self):
        return self._relations

    #
    # 'public' methods
    #
    def reduce_tower(self, p, truncate_base=False):
        """
        Canonical representative of p modulo q_1..q_k. With truncate_base,
        monomials of base degree above n are dropped after each level; such
        classes vanish on the base and never reach the integrated result.
        """
        ctx = self._ctx
        p = p.in_table(ctx.table)
        for j in range(ctx.k, 0, -1):
            p = self._reduce_level(p, j)
            if truncate_base:
                p = p.truncate(ctx.base_weights, ctx.n)
        return p

    def integrate_fibers(self, p):
        """Push a reduced class down to the base: the coefficient of u_k^(r-1) ... u_1^(r-1)."""
        ctx = self._ctx
        p = p.in_table(ctx.table)
        for j in range(1, ctx.k + 1):
            degree = p.degree_in(ctx.u(j))
            if degree >= ctx.r:
                raise ValueError(
                    "Cannot integrate an unreduced class: degree {} in u{} (rank {})".format(degree, j, ctx.r)
                )
        for j in range(ctx.k, 0, -1):
            p = p.coeff_of(ctx.u(j), ctx.r - 1)
        return p

    def intersect(self, exponents, extra=None):
        """
        Base class of u_1^e_1 ... u_k^e_k * extra, where the cohomological
        degrees add up to dim X_k.
        """
        ctx = self._ctx
        _exponents = tuple(exponents)
        if len(_exponents) != ctx.k:
            raise ValueError("Expected {} exponents; received {}".format(ctx.k, len(_exponents)))
        if any(e < 0 for e in _exponents):
            raise ValueError("Exponents must be non-negative: {}".format(_exponents))
        _extra = ctx.constant(1) if extra is None else extra.in_table(ctx.table)

        degrees = _extra.weighted_degrees(ctx.class_weights)
        if len(degrees) > 1:
            raise ValueError("The extra class is not homogeneous: degrees {}".format(sorted(degrees)))
        extra_degree = degrees.pop() if degrees else 0
        if sum(_exponents) + extra_degree != ctx.total_dim:
            raise ValueError(
                "Dimension mismatch: exponents {} and extra degree {} do not add up to {}".format(
                    _exponents, extra_degree, ctx.total_dim
                )
            )

        monomial = ctx.constant(1)
        for j, e in enumerate(_exponents, start=1):
            monomial = monomial * ctx.poly(ctx.u(j)) ** e
        return self.integrate_fibers(self.reduce_tower(monomial * _extra))

    def reduced_product(self, factors, truncate_base=True):
        """
        Canonical form of a product, multiplying one factor at a time and
        reducing after each step. Equal to reduce_tower of the expanded
        product, because canonical forms are unique.
        """
        ctx = self._ctx
        result = ctx.constant(1)
        for count, factor in enumerate(factors, start=1):
            result = self.reduce_tower(result * factor, truncate_base=truncate_base)
            self.handler.log(
                method="reduced_product",
                message="Step {}: {} terms".format(count, len(result)),
                logger=logging.debug
            )
        return result

    def reduced_power(self, p, e, truncate_base=True):
        return self.reduced_product((p for _ in range(e)), truncate_base=truncate_base)

    #
    # 'private' methods
    #
    def _reduce_level(self, p, j):
        ctx = self._ctx
        u = ctx.u(j)
        parts = p.split(u)
        if not parts or max(parts) < ctx.r:
            return p
        kept = {e: part for e, part in parts.items() if e < ctx.r}
        result = Polynomial.join(kept, u, ctx.table)
        for e, part in parts.items():
            if e >= ctx.r:
                result = result + part * self._relations.residue(j, e)
        return result
