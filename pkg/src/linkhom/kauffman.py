"""Kauffman bracket state sum and the Jones polynomial of a braid closure."""

from __future__ import annotations

from itertools import product

from .algebra import LaurentPoly, quantum_int
from .braid import BraidWord, ClosureDiagram

__all__ = ["bracket", "jones", "state_weight"]

_MINUS_V = LaurentPoly.monomial(1, -1)


def state_weight(d: ClosureDiagram, state) -> int:
    """Number of crossings carrying the (-v) smoothing in ``state``.

    A positive letter pays -v for its cup-cap smoothing; for a negative letter
    the roles of the two smoothings are swapped.
    """
    return sum(1 for (_, sign), bit in zip(d.crossings, state) if bit == (sign > 0))


def bracket(b: BraidWord) -> LaurentPoly:
    """Sum over all smoothings of (-v)^(weight) [2]^(circles)."""
    d = ClosureDiagram(b)
    two = quantum_int(2)
    # collect by (weight, circles) first; the polynomial work is then tiny
    counts: dict[tuple[int, int], int] = {}
    for state in product((0, 1), repeat=len(d)):
        key = (state_weight(d, state), d.circle_labels(state)[0])
        counts[key] = counts.get(key, 0) + 1
    total = LaurentPoly()
    for (w, circles), mult in counts.items():
        total = total + (_MINUS_V**w) * (two**circles) * mult
    return total


def jones(b: BraidWord) -> LaurentPoly:
    """(-1)^(n-) v^(n+ - 2 n-) times the bracket; the unknot gets [2]."""
    sign = -1 if b.n_neg % 2 else 1
    return bracket(b).shift(b.n_pos - 2 * b.n_neg) * sign
