"""The triply graded invariant of a braid closure and its Euler characteristics."""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra import DEFAULT_CUTOFF, TriGradedSeries, TruncatedVSeries, rational_to_series
from ..braid import BraidWord, exponent_sum
from ..hecke import braid_to_hecke, ocneanu_trace, sigma
from .hochschild import hhh
from .rouquier import rouquier_complex

__all__ = ["KRResult", "hhh_braid", "kr", "hhh_euler", "kr_euler", "kr_jones_series", "trace_series"]


def hhh_braid(b: BraidWord, cutoff: int = DEFAULT_CUTOFF, method: str = "reduced") -> TriGradedSeries:
    """Unnormalized HHH of the Rouquier complex of ``b``, exact up to v^cutoff.

    ``method="full"`` works over Q[x_1..x_n] directly. ``"reduced"`` works modulo
    x_1 + ... + x_n and multiplies back by HH(Q[x]) = (1 + h v^2)/(1 - v^2).
    """
    if method == "full":
        return hhh(rouquier_complex(b, reduced=False), cutoff)
    if method != "reduced":
        raise ValueError("method must be 'reduced' or 'full'")
    small = hhh(rouquier_complex(b, reduced=True), cutoff)
    low = min([0] + [s.min_degree for s in small.parts.values()])
    factor = rational_to_series(sigma(), cutoff - low)
    return (small * factor).truncate(cutoff)


@dataclass(frozen=True)
class KRResult:
    """Normalized Poincare series with doubled t and h exponents."""

    series: TriGradedSeries
    braid: BraidWord
    cutoff: int
    writhe: int
    strands: int

    def to_json(self) -> str:
        return self.series.to_json()

    def __str__(self):
        return repr(self.series)


def kr(b: BraidWord, cutoff: int = DEFAULT_CUTOFF, method: str = "reduced") -> KRResult:
    """(t h)^((e - n)/2) v^e HHH(b), with e the exponent sum and n the strand count."""
    e, n = exponent_sum(b), b.strands
    raw = hhh_braid(b, cutoff - e, method)
    return KRResult(raw.shift(e - n, e - n, e), b, cutoff, e, n)


def hhh_euler(series: TriGradedSeries) -> TriGradedSeries:
    """Alternating sum over the homological degree; keeps (h, v).

    Odd t2 is read as t^(1/2) times an integer power, and only the integer
    power is set to -1.
    """
    coeffs: dict = {}
    for (t2, h2, d), c in series.monomials().items():
        sign = -1 if (t2 // 2) % 2 else 1
        coeffs[(0, h2, d)] = coeffs.get((0, h2, d), 0) + sign * c
    return TriGradedSeries.from_monomial_coeffs(coeffs, series.cutoff)


def kr_euler(result: KRResult) -> dict[int, TruncatedVSeries]:
    """t = -1 with a = v (h t)^(1/2): ``{power of a: series in v}``.

    A monomial t^(t2/2) h^(h2/2) v^d becomes (-1)^((t2 - h2)/2) a^h2 v^(d - h2).
    """
    grouped: dict = {}
    for (t2, h2, d), c in result.series.monomials().items():
        sign = -1 if ((t2 - h2) // 2) % 2 else 1
        slot = grouped.setdefault(h2, {})
        slot[d - h2] = slot.get(d - h2, 0) + sign * c
    return {a: TruncatedVSeries(s, result.cutoff - a) for a, s in sorted(grouped.items())}


def kr_jones_series(result: KRResult) -> TruncatedVSeries:
    """The Euler characteristic at a = v^2, exact up to the returned cutoff."""
    low = result.writhe - result.strands  # smallest possible power of a
    cut = result.cutoff + min(low, 0)
    out: dict = {}
    for a, s in kr_euler(result).items():
        for d, c in s.coeffs.items():
            if d + 2 * a <= cut:
                out[d + 2 * a] = out.get(d + 2 * a, 0) + c
    return TruncatedVSeries(out, cut)


def trace_series(b: BraidWord, cutoff: int = DEFAULT_CUTOFF) -> TriGradedSeries:
    """The Markov trace of the braid's Hecke image, expanded in v with h kept."""
    return rational_to_series(ocneanu_trace(braid_to_hecke(b)), cutoff)
