"""Graded R-bimodules that are free as left modules, stored by their right action.

A bimodule of rank r has a left basis m_1..m_r with internal degrees g_i, and
for each variable x_k a matrix rho_k whose column j expresses m_j * x_k in the
left basis. Polynomial degree counts 2 per variable, so an entry at (row, col)
of rho_k is homogeneous of degree 2 + g_col - g_row.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..algebra import LaurentPoly, MPoly, PolyMatrix

__all__ = [
    "RingCtx",
    "Bimodule",
    "BimoduleMap",
    "regular_bimodule",
    "bs_generator",
    "bs_word",
    "tensor",
    "tensor_maps",
    "graded_rank",
    "right_multiplication",
]


@dataclass(frozen=True)
class RingCtx:
    """The polynomial ring on n strands.

    With ``reduced=True`` the ring is Q[x_1..x_n]/(x_1 + ... + x_n), presented on
    the first n-1 variables with x_n = -(x_1 + ... + x_{n-1}). The sum is central
    in every Bott-Samelson bimodule, which is what makes the quotient useful.
    """

    n: int
    reduced: bool = False

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("strand count must be nonnegative")

    @property
    def nvars(self) -> int:
        return max(self.n - 1, 0) if self.reduced else self.n

    def x(self, k: int) -> MPoly:
        """The image of x_k (1-based)."""
        if not 1 <= k <= self.n:
            raise ValueError(f"variable x_{k} out of range for n = {self.n}")
        m = self.nvars
        if k <= m:
            return MPoly.var(m, k)
        out = MPoly(m)
        for j in range(1, m + 1):
            out = out - MPoly.var(m, j)
        return out

    def one(self) -> MPoly:
        return MPoly.const(self.nvars)


class Bimodule:
    __slots__ = ("ctx", "degrees", "right", "_powers")

    def __init__(self, ctx: RingCtx, degrees, right):
        self.ctx = ctx
        self.degrees = tuple(degrees)
        self.right = list(right)
        if len(self.right) != ctx.nvars:
            raise ValueError("need one right-action matrix per variable")
        self._powers: dict = {}

    @property
    def rank(self) -> int:
        return len(self.degrees)

    def shifted(self, k: int) -> Bimodule:
        """The grading shift M<k>: every generator degree goes up by k."""
        degs = [g + k for g in self.degrees]
        right = [PolyMatrix(self.ctx.nvars, degs, degs, m.entries) for m in self.right]
        return Bimodule(self.ctx, degs, right)

    def power(self, k: int, p: int) -> PolyMatrix:
        """rho_k^p, cached."""
        key = (k, p)
        if key not in self._powers:
            if p == 0:
                self._powers[key] = PolyMatrix.identity(self.ctx.nvars, self.degrees)
            else:
                self._powers[key] = self.power(k, p - 1) @ self.right[k - 1]
        return self._powers[key]

    def actions_commute(self) -> bool:
        r = self.right
        return all(r[a] @ r[b] == r[b] @ r[a] for a in range(len(r)) for b in range(a + 1, len(r)))

    def is_graded(self) -> bool:
        return all(m.check_graded(2) for m in self.right)

    def __repr__(self):
        return f"Bimodule(n={self.ctx.n}, rank={self.rank}, degrees={self.degrees})"


@dataclass
class BimoduleMap:
    """A left-linear map given by its matrix; ``degree`` is its internal degree."""

    source: Bimodule
    target: Bimodule
    matrix: PolyMatrix
    degree: int = 0

    def is_bimodule_map(self) -> bool:
        """Checks that the matrix intertwines every right action."""
        return all(rt @ self.matrix == self.matrix @ rs
                   for rs, rt in zip(self.source.right, self.target.right))

    def is_graded(self) -> bool:
        return self.matrix.check_graded(self.degree)


def right_multiplication(M: Bimodule, p: MPoly) -> PolyMatrix:
    """The matrix of m -> m * p for a polynomial p (evaluate p at the rho's)."""
    m = M.ctx.nvars
    out = PolyMatrix(m, M.degrees, M.degrees)
    for e, c in p.terms.items():
        term = None
        for k, ek in enumerate(e, start=1):
            if ek:
                pk = M.power(k, ek)
                term = pk if term is None else term @ pk
        if term is None:
            term = PolyMatrix.identity(m, M.degrees)
        out = out + term.scale(c)
    return out


def regular_bimodule(ctx: RingCtx, shift: int = 0) -> Bimodule:
    """R itself, generated in degree ``shift``."""
    degs = (shift,)
    right = [PolyMatrix(ctx.nvars, degs, degs, {(0, 0): MPoly.var(ctx.nvars, k)})
             for k in range(1, ctx.nvars + 1)]
    return Bimodule(ctx, degs, right)


def bs_generator(ctx: RingCtx, i: int) -> Bimodule:
    """R (x)_{R^s} R<-1> for s = s_i, on the left basis 1(x)1 (degree -1), 1(x)x_i (degree 1)."""
    if not 1 <= i <= ctx.n - 1:
        raise ValueError(f"generator s_{i} out of range for n = {ctx.n}")
    m = ctx.nvars
    xi, xj = ctx.x(i), ctx.x(i + 1)
    degs = (-1, 1)
    right = []
    for k in range(1, m + 1):
        if k == i:
            ent = {(1, 0): ctx.one(), (0, 1): -(xi * xj), (1, 1): xi + xj}
        elif k == i + 1:
            ent = {(0, 0): xi + xj, (1, 0): -ctx.one(), (0, 1): xi * xj}
        else:
            xk = MPoly.var(m, k)
            ent = {(0, 0): xk, (1, 1): xk}
        right.append(PolyMatrix(m, degs, degs, ent))
    return Bimodule(ctx, degs, right)


def tensor(M: Bimodule, N: Bimodule) -> Bimodule:
    """M (x)_R N on the basis m_i (x) n_j (index i * rank N + j)."""
    if M.ctx != N.ctx:
        raise ValueError("bimodules over different rings")
    rN = N.rank
    degs = [gm + gn for gm in M.degrees for gn in N.degrees]
    right = []
    cache: dict = {}
    for rho in N.right:
        ent: dict = {}
        for (l, j), a in rho.entries.items():
            if a not in cache:
                cache[a] = right_multiplication(M, a)
            for (p, i), c in cache[a].entries.items():
                key = (p * rN + l, i * rN + j)
                ent[key] = ent[key] + c if key in ent else c
        right.append(PolyMatrix(M.ctx.nvars, degs, degs, ent))
    return Bimodule(M.ctx, degs, right)


def tensor_maps(f: PolyMatrix | None, M: Bimodule, g: PolyMatrix | None, N: Bimodule) -> PolyMatrix:
    """f (x) id_N or id_M (x) g on M (x) N (exactly one of f, g is given).

    ``f`` maps M to some M'; ``g`` maps N to some N' and has its left
    coefficients pushed through M's right action.
    """
    m = M.ctx.nvars
    if (f is None) == (g is None):
        raise ValueError("give exactly one of f and g")
    ent: dict = {}
    if f is not None:
        rN = N.rank
        for (p, i), c in f.entries.items():
            for j in range(rN):
                ent[(p * rN + j, i * rN + j)] = c
        rows = [a + b for a in f.row_degrees for b in N.degrees]
        cols = [a + b for a in M.degrees for b in N.degrees]
        return PolyMatrix(m, rows, cols, ent)
    rN, rN2 = N.rank, len(g.row_degrees)
    cache: dict = {}
    for (l, j), a in g.entries.items():
        if a not in cache:
            cache[a] = right_multiplication(M, a)
        for (p, i), c in cache[a].entries.items():
            key = (p * rN2 + l, i * rN + j)
            ent[key] = ent[key] + c if key in ent else c
    rows = [a + b for a in M.degrees for b in g.row_degrees]
    cols = [a + b for a in M.degrees for b in N.degrees]
    return PolyMatrix(m, rows, cols, ent)


@lru_cache(maxsize=None)
def bs_word(ctx: RingCtx, word: tuple[int, ...]) -> Bimodule:
    """BS(s_{i_1}) (x) ... (x) BS(s_{i_r}); the empty word gives R."""
    if not word:
        return regular_bimodule(ctx)
    if len(word) == 1:
        return bs_generator(ctx, word[0])
    return tensor(bs_word(ctx, word[:-1]), bs_generator(ctx, word[-1]))


def graded_rank(M: Bimodule) -> LaurentPoly:
    """Sum of v^g over the left generators."""
    out: dict = {}
    for g in M.degrees:
        out[g] = out.get(g, 0) + 1
    return LaurentPoly(out)
