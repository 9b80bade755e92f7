import logging

from sympy import binomial

from jetbound import error_handler
from PolyRing.Polynomial import Polynomial


def _binomial(top, bottom):
    # C(top, -1) is 0.
    return int(binomial(top, bottom)) if bottom >= 0 else 0


def chern_coefficient(r, l, s):
    """Coefficient of u^(l-s) * c_s in c_l of the next level: C(r-s, l-s) - C(r-s, l-s-1)."""
    return _binomial(r - s, l - s) - _binomial(r - s, l - s - 1)


class RelationSet(object):
    """
    The Chern relations of a tower: lifted Chern classes c_l^[j] of V_j for
    j = 0..k-1 and the monic relations

        q_j = u_j^r + c_1^[j-1] u_j^(r-1) + ... + c_r^[j-1],   j = 1..k.

    Residues u_j^e mod q_j are memoized per level on first use, so a
    RelationSet should be built once per context and shared.
    """

    def __init__(self, ctx):
        self.handler = error_handler
        self.handler.module = "RelationSet"
        self.handler.method = "__init__"

        self._ctx = ctx
        self._lifted = []
        self._relations = []
        self._residues = {}

        self._build()
        self._check_first_chern_identity()
        self.handler.log(
            message="Built {} relations for {}".format(len(self._relations), ctx),
            logger=logging.debug
        )

    #
    # Properties
    #
    @property
    def ctx(self):
        return self._ctx

    @property
    def relations(self):
        """q_1..q_k as a tuple (index j-1 holds q_j)."""
        return tuple(self._relations)

    def relation(self, j):
        if not 1 <= j <= self._ctx.k:
            raise ValueError("q_{} is outside the tower of order {}".format(j, self._ctx.k))
        return self._relations[j - 1]

    def lifted_chern(self, j, l):
        """c_l^[j] for 0 <= j <= k-1; zero for l > r, one for l = 0."""
        if not 0 <= j < self._ctx.k:
            raise ValueError("Level {} outside 0..{}".format(j, self._ctx.k - 1))
        if l == 0:
            return self._ctx.constant(1)
        if l < 0 or l > self._ctx.r:
            return Polynomial.zero(self._ctx.table)
        return self._lifted[j][l - 1]

    def residue(self, j, e):
        """u_j^e reduced modulo q_j alone (coefficients may still hold u_1..u_{j-1})."""
        key = (j, e)
        cached = self._residues.get(key)
        if cached is None:
            u = self._ctx.poly(self._ctx.u(j))
            if e < self._ctx.r:
                cached = u ** e
            else:
                # u_j^e = u_j * u_j^(e-1); a single division step keeps degree < r.
                cached = (u * self.residue(j, e - 1)).reduce_monic(self._ctx.u(j), self.relation(j))
            self._residues[key] = cached
        return cached

    def dumps(self):
        """Canonical relation text, one relation per line."""
        return "\n".join("q{} = {}".format(j + 1, q.dumps()) for j, q in enumerate(self._relations))

    #
    # 'private' methods
    #
    def _build(self):
        ctx = self._ctx
        r = ctx.r
        level = [ctx.poly(ctx.c(l)) for l in range(1, r + 1)]
        self._lifted.append(level)
        self._relations.append(self._relation_from(1, level))

        for t in range(1, ctx.k):
            u = ctx.poly(ctx.u(t))
            previous = [ctx.constant(1)] + level
            level = []
            for l in range(1, r + 1):
                total = Polynomial.zero(ctx.table)
                for s in range(0, l + 1):
                    coefficient = chern_coefficient(r, l, s)
                    if coefficient:
                        total = total + coefficient * previous[s] * u ** (l - s)
                level.append(total)
            self._lifted.append(level)
            self._relations.append(self._relation_from(t + 1, level))

    def _relation_from(self, j, level):
        ctx = self._ctx
        u = ctx.poly(ctx.u(j))
        relation = u ** ctx.r
        for l, chern in enumerate(level, start=1):
            relation = relation + chern * u ** (ctx.r - l)
        return relation

    def _check_first_chern_identity(self):
        ctx = self._ctx
        for j in range(ctx.k):
            expected = ctx.poly(ctx.c(1))
            for s in range(1, j + 1):
                expected = expected + (ctx.r - 1) * ctx.poly(ctx.u(s))
            if self._lifted[j][0] != expected:
                raise RuntimeError(
                    "c_1 of level {} is {}; expected {}".format(j, self._lifted[j][0], expected)
                )


def build_relations(ctx):
    return RelationSet(ctx)
