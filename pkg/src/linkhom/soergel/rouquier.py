"""Rouquier complexes of braid words as cubes of Bott-Samelson bimodules.

A letter +i contributes the two-term complex R<1> -> BS(s_i) (homological
degrees -1, 0) and a letter -i contributes BS(s_i) -> R<-1> (degrees 0, 1).
The complex of a word is the tensor product of these over R, so its terms are
indexed by vertices of a cube: one bit per letter choosing the lower (0) or
upper (1) term.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from ..algebra import MPoly, PolyMatrix
from ..braid import BraidWord
from .bimodule import Bimodule, RingCtx, bs_word, regular_bimodule, tensor_maps

__all__ = ["BimoduleComplex", "rouquier_complex", "direct_sum"]


@dataclass
class BimoduleComplex:
    """Terms C^j with differentials d^j : C^j -> C^(j+1).

    ``summands[j]`` lists ``(label, bimodule)`` in the order in which they are
    stacked inside ``terms[j]``.
    """

    ctx: RingCtx
    terms: dict[int, Bimodule]
    differentials: dict[int, PolyMatrix]
    summands: dict[int, list] = field(default_factory=dict)

    def degrees(self) -> list[int]:
        return sorted(self.terms)

    def d_squared_zero(self) -> bool:
        for j, d in self.differentials.items():
            nxt = self.differentials.get(j + 1)
            if nxt is not None and not (nxt @ d).is_zero():
                return False
        return True

    def differentials_are_bimodule_maps(self) -> bool:
        for j, d in self.differentials.items():
            src, tgt = self.terms[j], self.terms[j + 1]
            if any(rt @ d != d @ rs for rs, rt in zip(src.right, tgt.right)):
                return False
        return True


def direct_sum(ctx: RingCtx, parts: list[Bimodule]) -> tuple[Bimodule, list[int]]:
    """Block-diagonal sum and the starting index of each block."""
    degs: list[int] = []
    offsets = []
    for M in parts:
        offsets.append(len(degs))
        degs.extend(M.degrees)
    right = []
    for k in range(ctx.nvars):
        ent = {}
        for M, off in zip(parts, offsets):
            for (r, c), p in M.right[k].entries.items():
                ent[(r + off, c + off)] = p
        right.append(PolyMatrix(ctx.nvars, degs, degs, ent))
    return Bimodule(ctx, degs, right), offsets


def _factor_is_bs(sign: int, bit: int) -> bool:
    return bit == 1 if sign > 0 else bit == 0


def _factor_shift(sign: int, bit: int) -> int:
    if _factor_is_bs(sign, bit):
        return 0
    return 1 if sign > 0 else -1


def _factor_hdeg(sign: int, bit: int) -> int:
    return bit - 1 if sign > 0 else bit


def _vertex(ctx, letters, bits) -> tuple[tuple[int, ...], int]:
    word = tuple(abs(a) for a, b in zip(letters, bits) if _factor_is_bs(a, b))
    shift = sum(_factor_shift(a, b) for a, b in zip(letters, bits))
    return word, shift


def _local_map(ctx: RingCtx, i: int, sign: int) -> PolyMatrix:
    m = ctx.nvars
    if sign > 0:
        # 1 -> (x_i - x_{i+1}) (x) 1 + 1 (x) (x_i - x_{i+1}) = -2 x_{i+1} (1(x)1) + 2 (1(x)x_i)
        return PolyMatrix(m, (-1, 1), (1,), {(0, 0): ctx.x(i + 1) * -2, (1, 0): MPoly.const(m, 2)})
    # multiplication: 1(x)1 -> 1, 1(x)x_i -> x_i
    return PolyMatrix(m, (-1,), (-1, 1), {(0, 0): ctx.one(), (0, 1): ctx.x(i)})


def _edge(ctx, letters, bits, p) -> PolyMatrix:
    """The cube edge flipping letter p (bits[p] == 0), without its sign."""
    a = letters[p]
    i = abs(a)
    left = tuple(abs(x) for x, b in zip(letters[:p], bits[:p]) if _factor_is_bs(x, b))
    right = tuple(abs(x) for x, b in zip(letters[p + 1:], bits[p + 1:]) if _factor_is_bs(x, b))
    L, Rw = bs_word(ctx, left), bs_word(ctx, right)
    local = _local_map(ctx, i, a)
    src_factor = regular_bimodule(ctx, 1) if a > 0 else bs_word(ctx, (i,))
    step = tensor_maps(None, L, local, src_factor)
    return _tensor_right(step, L, Rw)


def _tensor_right(step: PolyMatrix, L: Bimodule, Rw: Bimodule) -> PolyMatrix:
    # (id_L (x) f) (x) id_Rw: left coefficients stay put
    rR = Rw.rank
    ent = {}
    for (p, q), c in step.entries.items():
        for j in range(rR):
            ent[(p * rR + j, q * rR + j)] = c
    rows = [a + b for a in step.row_degrees for b in Rw.degrees]
    cols = [a + b for a in step.col_degrees for b in Rw.degrees]
    return PolyMatrix(L.ctx.nvars, rows, cols, ent)


def rouquier_complex(b: BraidWord, reduced: bool = False) -> BimoduleComplex:
    """The Rouquier complex of a braid word over R_n (or its quotient by x_1 + ... + x_n)."""
    ctx = RingCtx(b.strands, reduced)
    letters = b.letters
    c = len(letters)
    n_pos = b.n_pos
    by_degree: dict[int, list] = {}
    for bits in product((0, 1), repeat=c):
        by_degree.setdefault(sum(bits) - n_pos, []).append(bits)
    terms, summands, offsets = {}, {}, {}
    for j, verts in by_degree.items():
        parts = []
        for bits in verts:
            word, shift = _vertex(ctx, letters, bits)
            M = bs_word(ctx, word)
            parts.append(M.shifted(shift) if shift else M)
        total, offs = direct_sum(ctx, parts)
        terms[j] = total
        summands[j] = list(zip(verts, parts))
        offsets[j] = {bits: off for bits, off in zip(verts, offs)}
    diffs = {}
    for j in sorted(terms):
        if j + 1 not in terms:
            continue
        src, tgt = terms[j], terms[j + 1]
        ent: dict = {}
        for bits in by_degree[j]:
            hsum = 0
            for p in range(c):
                if bits[p] == 0:
                    nb = bits[:p] + (1,) + bits[p + 1:]
                    sign = -1 if hsum % 2 else 1
                    edge = _edge(ctx, letters, bits, p)
                    so, to = offsets[j][bits], offsets[j + 1][nb]
                    for (r, q), poly in edge.entries.items():
                        key = (r + to, q + so)
                        val = poly * sign
                        ent[key] = ent[key] + val if key in ent else val
                hsum += _factor_hdeg(letters[p], bits[p])
        diffs[j] = PolyMatrix(ctx.nvars, tgt.degrees, src.degrees, ent)
    return BimoduleComplex(ctx, terms, diffs, summands)
