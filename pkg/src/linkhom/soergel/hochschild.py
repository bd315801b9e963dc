"""Hochschild homology through the Koszul complex, and HHH of a complex of bimodules.

For a bimodule M over a polynomial ring in m variables the Koszul complex is
M (x) Lambda(xi_1..xi_m) with d(u xi_S) = sum_t (-1)^t (u x_k - x_k u) xi_{S - k}
for k = S[t]. A generator xi_S raises the internal degree by 2|S| and sits in
Hochschild degree |S|. Everything is computed one internal degree at a time.

HHH of a complex C is the homology of the maps induced by C's differential on
HH of its terms. Equivalently it is the second page of the spectral sequence
of the double complex K(C) filtered by the homological degree of C. Cancelling
an invertible (constant) entry of the Koszul differential is a filtered
homotopy equivalence, so the fast path shrinks the double complex that way
first. When no Koszul entries survive, each Hochschild degree is a complex of
free modules on its own and its constant entries are cancelled as well. The
page is then read off from what is left.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from ..algebra import DEFAULT_CUTOFF, MPoly, PolyMatrix, TriGradedSeries, rank
from .bimodule import Bimodule
from .rouquier import BimoduleComplex

__all__ = [
    "koszul_terms",
    "koszul_differential",
    "lift_map",
    "hochschild",
    "hhh",
    "degree_window",
    "LayeredComplex",
]


def _subsets(m: int, h: int) -> list[tuple[int, ...]]:
    return list(combinations(range(1, m + 1), h))


def koszul_terms(M: Bimodule, h: int) -> list[int]:
    """Generator degrees of M (x) Lambda^h, ordered by (subset, generator)."""
    return [g + 2 * h for _ in _subsets(M.ctx.nvars, h) for g in M.degrees]


def koszul_differential(M: Bimodule, h: int) -> PolyMatrix:
    """d : M (x) Lambda^h -> M (x) Lambda^(h-1)."""
    m = M.ctx.nvars
    src = _subsets(m, h)
    tgt = {S: i for i, S in enumerate(_subsets(m, h - 1))}
    r = M.rank
    ent: dict = {}

    def add(key, p):
        ent[key] = ent[key] + p if key in ent else p

    for si, S in enumerate(src):
        for t, k in enumerate(S):
            sign = -1 if t % 2 else 1
            ti = tgt[S[:t] + S[t + 1:]]
            xk = MPoly.var(m, k)
            for (a, b), p in M.right[k - 1].entries.items():
                add((ti * r + a, si * r + b), p * sign)
            for a in range(r):
                add((ti * r + a, si * r + a), xk * -sign)
    return PolyMatrix(m, koszul_terms(M, h - 1), koszul_terms(M, h), ent)


def lift_map(f: PolyMatrix, source: Bimodule, target: Bimodule, h: int) -> PolyMatrix:
    """f (x) id on the Lambda^h layer."""
    m = source.ctx.nvars
    count = len(_subsets(m, h))
    rs, rt = source.rank, target.rank
    ent = {}
    for s in range(count):
        for (a, b), p in f.entries.items():
            ent[(s * rt + a, s * rs + b)] = p
    return PolyMatrix(m, koszul_terms(target, h), koszul_terms(source, h), ent)


def degree_window(degrees, cutoff: int) -> range:
    """Internal degrees that can be nonzero, from the lowest generator up to ``cutoff``."""
    lo = min(degrees) if degrees else 0
    return range(lo, cutoff + 1)


class LayeredComplex:
    """Free graded R-modules indexed by (j, h) with two kinds of maps.

    ``inner[(j, h)]`` goes to (j, h - 1) and squares to zero; ``outer[(j, h)]``
    goes to (j + 1, h) and commutes with ``inner`` up to sign. Homology of the
    inner maps, then of the induced outer maps, is the page this class reads.
    """

    def __init__(self, nvars: int, degrees: dict, inner: dict, outer: dict):
        self.nvars = nvars
        self.degrees = degrees
        self.inner = inner
        self.outer = outer
        self._rank: dict = {}
        self._dim: dict = {}

    def dim(self, j: int, h: int, q: int) -> int:
        key = (j, h, q)
        if key not in self._dim:
            degs = self.degrees.get((j, h), [])
            self._dim[key] = len(PolyMatrix(self.nvars, degs, degs).graded_piece(q)[1]) if degs else 0
        return self._dim[key]

    def inner_rank(self, j: int, h: int, q: int) -> int:
        key = (j, h, q)
        if key not in self._rank:
            mat = self.inner.get((j, h))
            if mat is None or mat.is_zero():
                self._rank[key] = 0
            else:
                cols, _, rows = mat.graded_piece(q)
                self._rank[key] = rank(cols, len(rows))
        return self._rank[key]

    def first_page(self, j: int, h: int, q: int) -> int:
        return self.dim(j, h, q) - self.inner_rank(j, h, q) - self.inner_rank(j, h + 1, q)

    def induced_rank(self, j: int, h: int, q: int) -> int:
        """Rank of the outer map on inner homology, via rank [[a, 0], [f, b]] - rank a - rank b."""
        f = self.outer.get((j, h))
        if f is None or f.is_zero():
            return 0
        if not self.first_page(j, h, q) or not self.first_page(j + 1, h, q):
            return 0
        a = self.inner.get((j, h))
        b = self.inner.get((j + 1, h + 1))
        f_cols, _, f_rows = f.graded_piece(q)
        if a is not None and self.degrees.get((j, h - 1)):
            a_cols, _, a_rows = a.graded_piece(q)
            top = len(a_rows)
        else:
            a_cols, top = None, 0
        cols = []
        for idx, fc in enumerate(f_cols):
            col = dict(a_cols[idx]) if a_cols is not None else {}
            for i, v in fc.items():
                col[top + i] = v
            cols.append(col)
        if b is not None and self.degrees.get((j + 1, h + 1)):
            for bc in b.graded_piece(q)[0]:
                cols.append({top + i: v for i, v in bc.items()})
        total = rank(cols, top + len(f_rows))
        return total - self.inner_rank(j, h, q) - self.inner_rank(j + 1, h + 1, q)

    def second_page(self, cutoff: int) -> TriGradedSeries:
        js = sorted({j for j, _ in self.degrees})
        hs = sorted({h for _, h in self.degrees})
        all_degs = [g for degs in self.degrees.values() for g in degs]
        coeffs = {}
        for q in degree_window(all_degs, cutoff):
            for h in hs:
                induced = {j: self.induced_rank(j, h, q) for j in js}
                for j in js:
                    d = self.first_page(j, h, q) - induced[j] - induced.get(j - 1, 0)
                    if d:
                        coeffs[(2 * j, 2 * h, q)] = d
        return TriGradedSeries.from_monomial_coeffs(coeffs, cutoff)


def _koszul_layers(c: BimoduleComplex) -> LayeredComplex:
    m = c.ctx.nvars
    degrees, inner, outer = {}, {}, {}
    for j, M in c.terms.items():
        for h in range(m + 1):
            degrees[(j, h)] = koszul_terms(M, h)
            if h >= 1:
                inner[(j, h)] = koszul_differential(M, h)
            if j in c.differentials:
                outer[(j, h)] = lift_map(c.differentials[j], M, c.terms[j + 1], h)
    return LayeredComplex(m, degrees, inner, outer)


def hochschild(M: Bimodule, cutoff: int = DEFAULT_CUTOFF) -> TriGradedSeries:
    """Poincare series of HH(M) with h2 = 2 * Hochschild degree, truncated at v^cutoff."""
    c = BimoduleComplex(M.ctx, {0: M}, {})
    return _koszul_layers(c).second_page(cutoff)


# -- cancellation --------------------------------------------------------------

class _Cancellation:
    """Sparse double complex over R with Gaussian elimination on constant entries.

    Generators are (j, h, degree). Maps raising j by 2 or more are discarded:
    they never reach the second page.
    """

    def __init__(self, nvars: int):
        self.nvars = nvars
        self.gens: list[tuple[int, int, int]] = []
        self.out: list[dict] = []
        self.inc: list[dict] = []
        self.alive: list[bool] = []

    def add_gen(self, j, h, deg) -> int:
        self.gens.append((j, h, deg))
        self.out.append({})
        self.inc.append({})
        self.alive.append(True)
        return len(self.gens) - 1

    def add_entry(self, x: int, y: int, p: MPoly):
        if not p:
            return
        old = self.out[x].get(y)
        new = old + p if old is not None else p
        if new:
            self.out[x][y] = new
            self.inc[y][x] = new
        else:
            self.out[x].pop(y, None)
            self.inc[y].pop(x, None)

    def _kill(self, g: int):
        for y in self.out[g]:
            self.inc[y].pop(g, None)
        for x in self.inc[g]:
            self.out[x].pop(g, None)
        self.out[g] = {}
        self.inc[g] = {}
        self.alive[g] = False

    def _pivot_from(self, a: int, step: int):
        ja = self.gens[a][0]
        best = None
        for b, p in self.out[a].items():
            if self.gens[b][0] == ja + step and p.is_constant():
                cost = len(self.inc[b])
                if best is None or cost < best[0]:
                    best = (cost, b, p.constant_term())
        return best

    def eliminate(self, step: int = 0):
        """Cancel constant entries that raise j by ``step`` (0: inner maps, 1: outer maps)."""
        order = sorted(range(len(self.gens)), key=lambda g: len(self.out[g]))
        progress = True
        while progress:
            progress = False
            for a in order:
                if not self.alive[a]:
                    continue
                piv = self._pivot_from(a, step)
                if piv is None:
                    continue
                _, b, c = piv
                self._cancel(a, b, c)
                progress = True

    def inner_is_zero(self) -> bool:
        return all(self.gens[y][0] != self.gens[x][0]
                   for x in range(len(self.gens)) if self.alive[x] for y in self.out[x])

    def _cancel(self, a: int, b: int, c):
        inv = Fraction(1, 1) / c
        ja = self.gens[a][0]
        sources = [(x, p) for x, p in self.inc[b].items() if x != a]
        targets = [(y, p) for y, p in self.out[a].items() if y != b]
        for x, px in sources:
            jx = self.gens[x][0]
            for y, py in targets:
                # shifts in j add up; anything beyond one step is irrelevant
                if (self.gens[y][0] - ja) + (ja - jx) >= 2:
                    continue
                self.add_entry(x, y, (px * py) * (-inv))
        self._kill(a)
        self._kill(b)

    def to_layers(self) -> LayeredComplex:
        index: dict = {}
        degrees: dict = {}
        for g, (j, h, d) in enumerate(self.gens):
            if self.alive[g]:
                lst = degrees.setdefault((j, h), [])
                index[g] = len(lst)
                lst.append(d)
        inner_ent: dict = {}
        outer_ent: dict = {}
        for x, (j, h, _) in enumerate(self.gens):
            if not self.alive[x]:
                continue
            for y, p in self.out[x].items():
                jy, hy, _ = self.gens[y]
                if jy == j and hy == h - 1:
                    inner_ent.setdefault((j, h), {})[(index[y], index[x])] = p
                elif jy == j + 1 and hy == h:
                    outer_ent.setdefault((j, h), {})[(index[y], index[x])] = p
        m = self.nvars
        inner = {k: PolyMatrix(m, degrees.get((k[0], k[1] - 1), []), degrees[k], e)
                 for k, e in inner_ent.items()}
        outer = {k: PolyMatrix(m, degrees.get((k[0] + 1, k[1]), []), degrees[k], e)
                 for k, e in outer_ent.items()}
        return LayeredComplex(m, degrees, inner, outer)


def _cancelled_layers(c: BimoduleComplex, cutoff: int) -> LayeredComplex:
    m = c.ctx.nvars
    cx = _Cancellation(m)
    ids: dict = {}
    for j, M in c.terms.items():
        for h in range(m + 1):
            ids[(j, h)] = [cx.add_gen(j, h, d) if d <= cutoff else None
                           for d in koszul_terms(M, h)]
    for j, M in c.terms.items():
        for h in range(1, m + 1):
            src, tgt = ids[(j, h)], ids[(j, h - 1)]
            for (r, col), p in koszul_differential(M, h).entries.items():
                if src[col] is not None and tgt[r] is not None:
                    cx.add_entry(src[col], tgt[r], p)
        if j in c.differentials:
            for h in range(m + 1):
                # (-1)^h makes the two differentials anticommute
                sign = -1 if h % 2 else 1
                src, tgt = ids[(j, h)], ids[(j + 1, h)]
                f = lift_map(c.differentials[j], M, c.terms[j + 1], h)
                for (r, col), p in f.entries.items():
                    if src[col] is not None and tgt[r] is not None:
                        cx.add_entry(src[col], tgt[r], p * sign)
    cx.eliminate(0)
    if cx.inner_is_zero():
        # the first page is now free, and each Hochschild degree is a plain
        # complex of free modules, so its constant entries may go as well
        cx.eliminate(1)
    return cx.to_layers()


def hhh(c: BimoduleComplex, cutoff: int = DEFAULT_CUTOFF, cancel: bool = True) -> TriGradedSeries:
    """Poincare series of H(HH(C)): t2 = 2 j (homological), h2 = 2 h, v = internal degree.

    With ``cancel=False`` the Koszul complexes of the terms are used as they are
    (slow, kept as a reference).
    """
    layers = _cancelled_layers(c, cutoff) if cancel else _koszul_layers(c)
    return layers.second_page(cutoff)
