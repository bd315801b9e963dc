"""Multivariate polynomials over Q in x_1..x_n (deg x_i = 2) and matrices over them."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from numbers import Rational

__all__ = ["MPoly", "PolyMatrix", "monomials_of_degree"]


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class MPoly:
    """Sparse polynomial ``{exponent tuple: coefficient}`` in a fixed number of variables."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms = {e: _norm(c) for e, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, n: int, c=1) -> MPoly:
        return cls(n, {(0,) * n: c})

    @classmethod
    def var(cls, n: int, i: int) -> MPoly:
        """x_i, 1-based."""
        e = [0] * n
        e[i - 1] = 1
        return cls(n, {tuple(e): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int | None:
        """Polynomial degree (x_i counts 1); None for a non-homogeneous polynomial or zero."""
        degs = {sum(e) for e in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def constant_term(self):
        return self.terms.get((0,) * self.n, 0)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def _coerce(self, other):
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, Rational)):
            return MPoly.const(self.n, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MPoly(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return MPoly(self.n, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, MPoly):
            return NotImplemented
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = MPoly.const(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def substitute_linear(self, index: int, replacement: MPoly) -> MPoly:
        """Replace x_index (1-based) by ``replacement``."""
        out = MPoly(self.n)
        cache = {0: MPoly.const(self.n)}
        for e, c in self.terms.items():
            k = e[index - 1]
            if k not in cache:
                cache[k] = replacement**k
            rest = list(e)
            rest[index - 1] = 0
            out = out + MPoly(self.n, {tuple(rest): c}) * cache[k]
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items()):
            mono = "*".join(
                f"x{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k
            )
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def monomials_of_degree(n: int, d: int) -> list[tuple]:
    """All exponent tuples in n variables of total degree d, in a fixed order."""
    if d < 0:
        return []
    if n == 0:
        return [()] if d == 0 else []
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


class PolyMatrix:
    """Sparse matrix over Q[x_1..x_n] between graded free modules.

    ``entries[(row, col)]`` is an MPoly; ``row_degrees`` / ``col_degrees`` are
    the internal degrees of the generators (x_i has degree 2). The matrix acts on
    coordinate column vectors, so column j is the image of the j-th source generator.
    """

    def __init__(self, n: int, row_degrees, col_degrees, entries=None):
        self.n = n
        self.row_degrees = list(row_degrees)
        self.col_degrees = list(col_degrees)
        self.entries = {k: p for k, p in (entries or {}).items() if p}

    @property
    def shape(self):
        return len(self.row_degrees), len(self.col_degrees)

    @classmethod
    def identity(cls, n: int, degrees) -> PolyMatrix:
        return cls(n, degrees, degrees, {(i, i): MPoly.const(n) for i in range(len(degrees))})

    def check_graded(self, shift: int = 0) -> bool:
        """Every entry homogeneous of v-degree col_deg - row_deg + shift (map of degree ``shift``)."""
        for (r, c), p in self.entries.items():
            want = self.col_degrees[c] - self.row_degrees[r] + shift
            if want % 2:
                return False
            for e in p.terms:
                if 2 * sum(e) != want:
                    return False
        return True

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        if self.shape[1] != other.shape[0]:
            raise ValueError("dimension mismatch in PolyMatrix product")
        by_row: dict = {}
        for (k, j), q in other.entries.items():
            by_row.setdefault(k, []).append((j, q))
        out: dict = {}
        for (i, k), p in self.entries.items():
            for j, q in by_row.get(k, ()):
                key = (i, j)
                out[key] = out[key] + p * q if key in out else p * q
        return PolyMatrix(self.n, self.row_degrees, other.col_degrees, out)

    def __add__(self, other: PolyMatrix) -> PolyMatrix:
        out = dict(self.entries)
        for k, p in other.entries.items():
            out[k] = out[k] + p if k in out else p
        return PolyMatrix(self.n, self.row_degrees, self.col_degrees, out)

    def scale(self, c) -> PolyMatrix:
        return PolyMatrix(self.n, self.row_degrees, self.col_degrees,
                          {k: p * c for k, p in self.entries.items()})

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def is_zero(self) -> bool:
        return not self.entries

    def graded_piece(self, degree: int, shift: int = 0):
        """Restrict to the v-degree ``degree`` piece of the source.

        Returns ``(columns, col_basis, row_basis)``: one sparse dict per source basis
        element ``(generator, monomial)``, indexing the target basis in degree
        ``degree + shift``.
        """
        col_basis = _piece_basis(self.n, self.col_degrees, degree)
        row_basis = _piece_basis(self.n, self.row_degrees, degree + shift)
        row_index = {b: i for i, b in enumerate(row_basis)}
        by_col: dict = {}
        for (r, c), p in self.entries.items():
            by_col.setdefault(c, []).append((r, p))
        cols = []
        for gen, mono in col_basis:
            col: dict = {}
            for r, p in by_col.get(gen, ()):
                for e, c in p.terms.items():
                    key = row_index[(r, tuple(a + b for a, b in zip(e, mono)))]
                    col[key] = col.get(key, 0) + c
            cols.append({k: c for k, c in col.items() if c})
        return cols, col_basis, row_basis


def _piece_basis(n, degrees, degree):
    basis = []
    for g, gd in enumerate(degrees):
        diff = degree - gd
        if diff < 0 or diff % 2:
            continue
        for mono in monomials_of_degree(n, diff // 2):
            basis.append((g, mono))
    return basis
