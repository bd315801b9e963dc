"""Truncated Laurent series in v and triply graded (t, h, v) series."""

from __future__ import annotations

import json
from fractions import Fraction

from .laurent import LaurentPoly, _norm
from .rational import MultiRational

__all__ = ["TruncatedVSeries", "TriGradedSeries", "rational_to_series", "DEFAULT_CUTOFF"]

DEFAULT_CUTOFF = 20


class TruncatedVSeries:
    """Laurent series in v known exactly up to and including v^cutoff."""

    __slots__ = ("cutoff", "coeffs")

    def __init__(self, coeffs: dict, cutoff: int):
        self.cutoff = cutoff
        self.coeffs = {d: _norm(c) for d, c in coeffs.items() if c and d <= cutoff}

    @classmethod
    def from_laurent(cls, p: LaurentPoly, cutoff: int) -> TruncatedVSeries:
        return cls(p.terms, cutoff)

    @property
    def min_degree(self) -> int:
        """Lowest nonzero degree (cutoff + 1 for the zero series)."""
        return min(self.coeffs) if self.coeffs else self.cutoff + 1

    def dense(self) -> tuple[int, list]:
        """(vmin, [coeff of v^vmin, ..., coeff of v^cutoff])."""
        lo = self.min_degree
        return lo, [self.coeffs.get(d, 0) for d in range(lo, self.cutoff + 1)]

    def is_zero(self) -> bool:
        return not self.coeffs

    def truncate(self, cutoff: int) -> TruncatedVSeries:
        if cutoff > self.cutoff:
            raise ValueError("cannot extend a truncated series")
        return TruncatedVSeries(self.coeffs, cutoff)

    def shift(self, k: int) -> TruncatedVSeries:
        return TruncatedVSeries({d + k: c for d, c in self.coeffs.items()}, self.cutoff + k)

    def __add__(self, other):
        if isinstance(other, LaurentPoly):
            other = TruncatedVSeries.from_laurent(other, self.cutoff)
        cut = min(self.cutoff, other.cutoff)
        out = {d: c for d, c in self.coeffs.items() if d <= cut}
        for d, c in other.coeffs.items():
            if d <= cut:
                out[d] = out.get(d, 0) + c
        return TruncatedVSeries(out, cut)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedVSeries({d: -c for d, c in self.coeffs.items()}, self.cutoff)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> TruncatedVSeries:
        return TruncatedVSeries({d: a * c for d, a in self.coeffs.items()}, self.cutoff)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, LaurentPoly):
            other = TruncatedVSeries.from_laurent(other, self.cutoff + max(0, other.max_degree()) if other else self.cutoff)
            # a polynomial is known in every degree
            cut = self.cutoff + (other.min_degree if other.coeffs else 0)
        else:
            m1 = min(self.min_degree, 0)
            m2 = min(other.min_degree, 0)
            cut = min(self.cutoff + m2, other.cutoff + m1)
        out: dict = {}
        for d1, c1 in self.coeffs.items():
            for d2, c2 in other.coeffs.items():
                d = d1 + d2
                if d <= cut:
                    out[d] = out.get(d, 0) + c1 * c2
        return TruncatedVSeries(out, cut)

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        if not isinstance(other, TruncatedVSeries):
            return NotImplemented
        return self.cutoff == other.cutoff and self.coeffs == other.coeffs

    def agrees(self, other: TruncatedVSeries) -> bool:
        """Equality up to the smaller of the two cutoffs."""
        cut = min(self.cutoff, other.cutoff)
        return self.truncate(cut) == other.truncate(cut)

    def __repr__(self):
        body = LaurentPoly(self.coeffs)
        return f"({body} + O(v^{self.cutoff + 1}))"


class TriGradedSeries:
    """Map (t2, h2) -> TruncatedVSeries, with doubled t and h exponents."""

    __slots__ = ("parts", "cutoff")

    def __init__(self, parts: dict, cutoff: int):
        self.cutoff = cutoff
        self.parts = {}
        for key, s in parts.items():
            s = s if s.cutoff == cutoff else s.truncate(cutoff)
            if not s.is_zero():
                self.parts[(int(key[0]), int(key[1]))] = s

    @classmethod
    def zero(cls, cutoff: int) -> TriGradedSeries:
        return cls({}, cutoff)

    @classmethod
    def from_monomial_coeffs(cls, coeffs: dict, cutoff: int) -> TriGradedSeries:
        """Build from ``{(t2, h2, d): c}``."""
        grouped: dict = {}
        for (t2, h2, d), c in coeffs.items():
            grouped.setdefault((t2, h2), {})[d] = grouped.get((t2, h2), {}).get(d, 0) + c
        return cls({k: TruncatedVSeries(v, cutoff) for k, v in grouped.items()}, cutoff)

    def coefficient(self, t2: int, h2: int, d: int):
        s = self.parts.get((t2, h2))
        return s.coeffs.get(d, 0) if s else 0

    def monomials(self) -> dict:
        return {(t2, h2, d): c for (t2, h2), s in self.parts.items() for d, c in s.coeffs.items()}

    def truncate(self, cutoff: int) -> TriGradedSeries:
        return TriGradedSeries({k: s.truncate(cutoff) for k, s in self.parts.items()}, cutoff)

    def shift(self, t2: int = 0, h2: int = 0, v: int = 0) -> TriGradedSeries:
        return TriGradedSeries(
            {(a + t2, b + h2): s.shift(v) for (a, b), s in self.parts.items()}, self.cutoff + v)

    def __add__(self, other: TriGradedSeries) -> TriGradedSeries:
        cut = min(self.cutoff, other.cutoff)
        out = {k: s.truncate(cut) for k, s in self.parts.items()}
        for k, s in other.parts.items():
            out[k] = out[k] + s if k in out else s.truncate(cut)
        return TriGradedSeries(out, cut)

    def __mul__(self, other: TriGradedSeries) -> TriGradedSeries:
        m1 = min([0] + [s.min_degree for s in self.parts.values()])
        m2 = min([0] + [s.min_degree for s in other.parts.values()])
        cut = min(self.cutoff + m2, other.cutoff + m1)
        out: dict = {}
        for (a1, b1), s1 in self.parts.items():
            for (a2, b2), s2 in other.parts.items():
                prod: dict = {}
                for d1, c1 in s1.coeffs.items():
                    for d2, c2 in s2.coeffs.items():
                        if d1 + d2 <= cut:
                            prod[d1 + d2] = prod.get(d1 + d2, 0) + c1 * c2
                key = (a1 + a2, b1 + b2)
                term = TruncatedVSeries(prod, cut)
                out[key] = out[key] + term if key in out else term
        return TriGradedSeries(out, cut)

    def __eq__(self, other):
        if not isinstance(other, TriGradedSeries):
            return NotImplemented
        return self.cutoff == other.cutoff and self.parts == other.parts

    def agrees(self, other: TriGradedSeries) -> bool:
        cut = min(self.cutoff, other.cutoff)
        return self.truncate(cut) == other.truncate(cut)

    def parity_ok(self) -> bool:
        """All t2 share a parity and all h2 share a parity."""
        return len({k[0] % 2 for k in self.parts}) <= 1 and len({k[1] % 2 for k in self.parts}) <= 1

    def to_json(self) -> str:
        rows = []
        for (t2, h2), s in sorted(self.parts.items()):
            vmin, coeffs = s.dense()
            rows.append({"t2": t2, "h2": h2, "vmin": vmin,
                         "coeffs": [_json_num(c) for c in coeffs], "cutoff": s.cutoff})
        return json.dumps(rows)

    @classmethod
    def from_json(cls, text: str, cutoff: int | None = None) -> TriGradedSeries:
        rows = json.loads(text)
        parts = {}
        cut = cutoff
        for r in rows:
            coeffs = {r["vmin"] + i: Fraction(c) for i, c in enumerate(r["coeffs"])}
            parts[(r["t2"], r["h2"])] = TruncatedVSeries(coeffs, r["cutoff"])
            cut = r["cutoff"] if cut is None else min(cut, r["cutoff"])
        return cls(parts, cut if cut is not None else DEFAULT_CUTOFF)

    def __repr__(self):
        if not self.parts:
            return f"0 + O(v^{self.cutoff + 1})"
        terms = []
        for (t2, h2), s in sorted(self.parts.items()):
            terms.append(f"t^({t2}/2) h^({h2}/2) {s!r}")
        return " + ".join(terms)


def _json_num(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else str(c)
    return c


def rational_to_series(r: MultiRational, cutoff: int = DEFAULT_CUTOFF):
    """Expand a rational function in v (possibly with h-coefficients) at v = 0.

    Returns a TruncatedVSeries when only v occurs, otherwise a TriGradedSeries
    with t2 = 0 and doubled h exponents.
    """
    if r.is_zero():
        return TruncatedVSeries({}, cutoff)
    names = r.names
    vi = names.index("v")
    hi = names.index("h") if "h" in names else None
    extra = [i for i, n in enumerate(names) if i not in (vi, hi)]
    num = _split(r.numerator, vi, hi, extra)
    den = _split(r.denominator, vi, hi, extra)
    if not den:
        raise ZeroDivisionError("zero denominator")
    dlow = min(den)
    lead = den[dlow]
    if set(lead) != {0}:
        raise ValueError("lowest v-coefficient of the denominator must be free of h")
    lead_c = lead[0]
    # long division: series s with den * s = num, all coefficients polynomials in h
    nlow = min(num)
    start = nlow - dlow
    sol: dict[int, dict] = {}
    for d in range(start, cutoff + 1):
        # coefficient of v^(d + dlow) in num - den * sol
        target = dict(num.get(d + dlow, {}))
        for e, dc in den.items():
            if e == dlow:
                continue
            prev = sol.get(d + dlow - e)
            if prev:
                for hp, a in prev.items():
                    for hq, b in dc.items():
                        target[hp + hq] = target.get(hp + hq, 0) - a * b
        coeff = {hp: Fraction(c) / lead_c for hp, c in target.items() if c}
        if coeff:
            sol[d] = coeff
    if hi is None:
        return TruncatedVSeries({d: c[0] for d, c in sol.items() if 0 in c}, cutoff)
    grouped: dict = {}
    for d, c in sol.items():
        for hp, val in c.items():
            grouped.setdefault(hp, {})[d] = val
    return TriGradedSeries({(0, 2 * hp): TruncatedVSeries(g, cutoff) for hp, g in grouped.items()},
                           cutoff)


def _split(poly, vi, hi, extra):
    """PolyElement -> {v-degree: {h-degree: Fraction}}."""
    out: dict = {}
    for mono, c in poly.terms():
        if any(mono[i] for i in extra):
            raise ValueError("only v and h may appear in a series expansion")
        hd = mono[hi] if hi is not None else 0
        slot = out.setdefault(mono[vi], {})
        slot[hd] = slot.get(hd, 0) + Fraction(int(c.numerator), int(c.denominator))
    return out
