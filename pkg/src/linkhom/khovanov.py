"""Khovanov homology of braid closures from the cube of resolutions.

Tensor factors of A are indexed by circles; a basis element of A^{(x)c} is a
tuple of bits (0 for the unit 1, 1 for x). The unit has degree +1 and x has
degree -1, so the unknot has Poincare polynomial v + v^-1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .algebra import LaurentPoly, rank
from .braid import BraidWord, ClosureDiagram

__all__ = ["FrobeniusData", "frobenius_ops", "CubeComplex", "cube_complex", "kh_poincare",
           "poincare_to_text", "euler_characteristic"]

ONE, X = 0, 1


@dataclass(frozen=True)
class FrobeniusData:
    """The rank-two Frobenius algebra A = Q[x]/(x^2) with its structure maps."""

    degrees: tuple[int, int] = (1, -1)

    @staticmethod
    def mult(a: int, b: int) -> dict:
        if a == X and b == X:
            return {}
        return {X if X in (a, b) else ONE: 1}

    @staticmethod
    def comult(a: int) -> dict:
        if a == ONE:
            return {(ONE, X): 1, (X, ONE): 1}
        return {(X, X): 1}

    @staticmethod
    def unit() -> dict:
        return {ONE: 1}

    @staticmethod
    def counit(a: int) -> int:
        return 1 if a == X else 0


def frobenius_ops() -> FrobeniusData:
    return FrobeniusData()


@dataclass
class CubeComplex:
    """Chain complex of the cube: generators are (state, circle bits)."""

    braid: BraidWord
    states: list[tuple[int, ...]]
    circles: dict[tuple[int, ...], int]
    n_pos: int
    n_neg: int
    # differential: generator -> {generator: coefficient}
    differential: dict = field(default_factory=dict)

    def hom_degree(self, state) -> int:
        return sum(state) - self.n_neg

    def q_degree(self, state, bits) -> int:
        elem = sum(1 if b == ONE else -1 for b in bits)
        return elem + sum(state) + self.n_pos - 2 * self.n_neg

    def generators(self):
        for s in self.states:
            for bits in product((ONE, X), repeat=self.circles[s]):
                yield (s, bits)

    def apply(self, vec: dict) -> dict:
        out: dict = {}
        for g, c in vec.items():
            for g2, c2 in self.differential.get(g, {}).items():
                val = out.get(g2, 0) + c * c2
                if val:
                    out[g2] = val
                else:
                    out.pop(g2, None)
        return out

    def d_squared_zero(self) -> bool:
        return all(not self.apply(self.apply({g: 1})) for g in self.generators())


def _smoothing(d: ClosureDiagram, cube_state) -> tuple[int, ...]:
    # cube bit 1 = the (-v) smoothing: cup-cap for positive letters, identity for negative
    return tuple(b if sign > 0 else 1 - b for (_, sign), b in zip(d.crossings, cube_state))


def cube_complex(b: BraidWord) -> CubeComplex:
    d = ClosureDiagram(b)
    c = len(d)
    states = list(product((0, 1), repeat=c))
    labels = {s: d.node_circles(_smoothing(d, s)) for s in states}
    cx = CubeComplex(b, states, {s: labels[s][0] for s in states}, d.n_pos, d.n_neg)
    frob = frobenius_ops()
    for s in states:
        count, lab = labels[s]
        for pos in range(c):
            if s[pos]:
                continue
            t = s[:pos] + (1,) + s[pos + 1:]
            sign = -1 if sum(s[:pos]) % 2 else 1
            count2, lab2 = labels[t]
            # circle correspondence through shared endpoint nodes
            fwd: dict[int, set] = {}
            for node, a in enumerate(lab):
                fwd.setdefault(a, set()).add(lab2[node])
            back: dict[int, set] = {}
            for node, a in enumerate(lab2):
                back.setdefault(a, set()).add(lab[node])
            for bits in product((ONE, X), repeat=count):
                img = _edge_image(bits, count, count2, fwd, back, frob)
                if img:
                    row = cx.differential.setdefault((s, bits), {})
                    for bits2, coeff in img.items():
                        row[(t, bits2)] = row.get((t, bits2), 0) + sign * coeff
    return cx


def _edge_image(bits, count, count2, fwd, back, frob) -> dict:
    if count2 == count - 1:
        # merge: two source circles go to one target circle
        merged = [a for a, tgt in fwd.items() if len(back[next(iter(tgt))]) == 2]
        a1, a2 = sorted(merged)
        target = next(iter(fwd[a1]))
        out_bits = [None] * count2
        for a in range(count):
            if a not in (a1, a2):
                out_bits[next(iter(fwd[a]))] = bits[a]
        res = {}
        for y, coeff in frob.mult(bits[a1], bits[a2]).items():
            ob = list(out_bits)
            ob[target] = y
            res[tuple(ob)] = coeff
        return res
    # split: one source circle becomes two target circles
    split = next(a for a, tgt in fwd.items() if len(tgt) == 2)
    t1, t2 = sorted(fwd[split])
    out_bits = [None] * count2
    for a in range(count):
        if a != split:
            out_bits[next(iter(fwd[a]))] = bits[a]
    res = {}
    for (y1, y2), coeff in frob.comult(bits[split]).items():
        ob = list(out_bits)
        ob[t1], ob[t2] = y1, y2
        res[tuple(ob)] = coeff
    return res


def kh_poincare(b: BraidWord) -> dict[tuple[int, int], int]:
    """Rational Khovanov homology as ``{(homological degree, q degree): dimension}``."""
    cx = cube_complex(b)
    groups: dict[tuple[int, int], list] = {}
    for g in cx.generators():
        s, bits = g
        groups.setdefault((cx.hom_degree(s), cx.q_degree(s, bits)), []).append(g)
    ranks: dict[tuple[int, int], int] = {}
    for (h, q), gens in groups.items():
        target = groups.get((h + 1, q), [])
        if not target:
            ranks[(h, q)] = 0
            continue
        index = {g: i for i, g in enumerate(target)}
        cols = [{index[g2]: c for g2, c in cx.differential.get(g, {}).items()} for g in gens]
        ranks[(h, q)] = rank(cols, len(target))
    out = {}
    for (h, q), gens in groups.items():
        dim = len(gens) - ranks[(h, q)] - ranks.get((h - 1, q), 0)
        if dim:
            out[(h, q)] = dim
    return dict(sorted(out.items()))


def euler_characteristic(poly: dict[tuple[int, int], int]) -> LaurentPoly:
    """Evaluate a (t, v) Poincare polynomial at t = -1."""
    out: dict = {}
    for (h, q), c in poly.items():
        out[q] = out.get(q, 0) + (-c if h % 2 else c)
    return LaurentPoly(out)


def poincare_to_text(poly: dict[tuple[int, int], int]) -> str:
    if not poly:
        return "0"
    parts = []
    for (h, q), c in sorted(poly.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        mono = []
        if h:
            mono.append("t" if h == 1 else f"t^{h}")
        if q:
            mono.append("v" if q == 1 else f"v^{q}")
        body = "*".join(mono)
        parts.append(f"{c}*{body}" if c != 1 and body else (body or str(c)))
    return " + ".join(parts)
