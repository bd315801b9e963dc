"""Exact linear algebra over Q for the finite-dimensional graded pieces.

Matrices are passed column-sparse: a list of ``{row_index: coefficient}`` dicts
plus the number of rows. Heavy lifting goes to FLINT's integer matrices; the
pure-Python ``rref_rank`` is kept as an independent reference.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

import flint

from .polys import PolyMatrix

__all__ = [
    "rank",
    "nullspace",
    "column_space",
    "rref_rank",
    "graded_piece_rank",
    "GradedPieceResult",
]


def _to_fmpz(cols, nrows):
    """Integer matrix (rows x cols) with each column scaled to clear denominators."""
    ncols = len(cols)
    if not (nrows and ncols):
        return None
    mat = flint.fmpz_mat(nrows, ncols)
    for j, col in enumerate(cols):
        den = 1
        for c in col.values():
            if isinstance(c, Fraction) and c.denominator != 1:
                den = lcm(den, c.denominator)
        if den == 1:
            for i, c in col.items():
                mat[i, j] = int(c)
        else:
            for i, c in col.items():
                mat[i, j] = int(c * den)
    return mat


def rank(cols, nrows: int) -> int:
    if not cols or not nrows or not any(cols):
        return 0
    return _to_fmpz(cols, nrows).rank()


def nullspace(cols, nrows: int) -> list[dict]:
    """Basis of {c : sum_j c_j col_j = 0}, as sparse dicts over the column index."""
    ncols = len(cols)
    if ncols == 0:
        return []
    if nrows == 0 or not any(cols):
        return [{j: 1} for j in range(ncols)]
    # column scaling multiplies null vectors coordinatewise; undo it afterwards
    scales = []
    for col in cols:
        den = 1
        for c in col.values():
            if isinstance(c, Fraction) and c.denominator != 1:
                den = lcm(den, c.denominator)
        scales.append(den)
    basis, dim = _to_fmpz(cols, nrows).nullspace()
    out = []
    for k in range(dim):
        vec = {}
        for j in range(ncols):
            c = int(basis[j, k])
            if c:
                vec[j] = c * scales[j]
        out.append(vec)
    return out


def column_space(cols, nrows: int) -> list[dict]:
    """A basis of the span of the given columns (a subset of them)."""
    if not cols or nrows == 0:
        return []
    rref, r = _to_fmpz(cols, nrows).rref()[:2]
    pivots = []
    row = 0
    for j in range(len(cols)):
        if row < r and rref[row, j] != 0:
            pivots.append(j)
            row += 1
    return [cols[j] for j in pivots]


def rref_rank(cols, nrows: int) -> int:
    """Rank by plain Gaussian elimination over Fraction (reference implementation)."""
    pivots: dict[int, dict] = {}
    r = 0
    for col in cols:
        vec = {i: Fraction(c) for i, c in col.items() if c}
        while vec:
            lead = min(vec)
            if lead not in pivots:
                pivots[lead] = vec
                r += 1
                break
            piv = pivots[lead]
            f = vec[lead] / piv[lead]
            for i, c in piv.items():
                val = vec.get(i, 0) - f * c
                if val:
                    vec[i] = val
                else:
                    vec.pop(i, None)
    return r


class GradedPieceResult:
    """Rank of a PolyMatrix on one graded piece, with kernel and image bases."""

    def __init__(self, rank, kernel, image, col_basis, row_basis):
        self.rank = rank
        self.kernel = kernel
        self.image = image
        self.col_basis = col_basis
        self.row_basis = row_basis

    def __repr__(self):
        return (f"GradedPieceResult(rank={self.rank}, dim_source={len(self.col_basis)}, "
                f"dim_target={len(self.row_basis)})")


def graded_piece_rank(M: PolyMatrix, degree: int, shift: int = 0) -> GradedPieceResult:
    """Restrict ``M`` to the source piece of v-degree ``degree`` and do exact linear algebra."""
    cols, col_basis, row_basis = M.graded_piece(degree, shift)
    nrows = len(row_basis)
    r = rank(cols, nrows)
    kernel = nullspace(cols, nrows)
    image = column_space(cols, nrows) if r else []
    if len(kernel) + r != len(col_basis):  # pragma: no cover - sanity net
        raise ArithmeticError("rank-nullity violated")
    return GradedPieceResult(r, kernel, image, col_basis, row_basis)
