"""Hecke algebra in the standard basis, the Ocneanu trace and HOMFLY-PT.

Permutations are tuples ``w`` with ``w[x]`` the image of ``x`` (0-based);
the simple transposition ``s_i`` swaps ``i-1`` and ``i``.
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import LaurentPoly, MultiRational, V
from .braid import BraidWord, exponent_sum

__all__ = [
    "HeckeElement",
    "identity_perm",
    "length",
    "reduced_word",
    "mul_generator",
    "braid_to_hecke",
    "ocneanu_trace",
    "trace_sigma_poly",
    "sigma",
    "homfly",
    "homfly_specialized",
    "trace_symmetry_check",
    "standard_functional",
]

_GAP = V.bar() - V  # v^-1 - v


def identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def length(w) -> int:
    """Number of inversions."""
    return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])


def reduced_word(w) -> list[int]:
    """Generators i_1..i_l with w = s_{i_1} ... s_{i_l} (right-to-left bubble sort)."""
    w = list(w)
    word: list[int] = []
    # peel right descents: w = w' s_i whenever w(i-1) > w(i)
    while True:
        for i in range(1, len(w)):
            if w[i - 1] > w[i]:
                w[i - 1], w[i] = w[i], w[i - 1]
                word.append(i)
                break
        else:
            break
    return word[::-1]


class HeckeElement:
    """Finite combination of standard basis elements H_w with Laurent coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms = {w: LaurentPoly.coerce(c) for w, c in (terms or {}).items() if c}

    @classmethod
    def one(cls, n: int) -> HeckeElement:
        return cls(n, {identity_perm(n): LaurentPoly.const(1)})

    @classmethod
    def basis(cls, w) -> HeckeElement:
        return cls(len(w), {tuple(w): LaurentPoly.const(1)})

    @classmethod
    def generator(cls, n: int, i: int, sign: int = 1) -> HeckeElement:
        return mul_generator(cls.one(n), i, sign)

    def __add__(self, other: HeckeElement) -> HeckeElement:
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return HeckeElement(self.n, out)

    def __neg__(self):
        return HeckeElement(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> HeckeElement:
        c = LaurentPoly.coerce(c)
        return HeckeElement(self.n, {w: a * c for w, a in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        if not isinstance(other, HeckeElement):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("Hecke elements on different strand counts")
        total = HeckeElement(self.n)
        for w, c in other.terms.items():
            part = self
            for i in reduced_word(w):
                part = mul_generator(part, i)
            total = total + part.scale(c)
        return total

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*H{list(w)}" for w, c in sorted(self.terms.items()))


def mul_generator(x: HeckeElement, i: int, sign: int = 1) -> HeckeElement:
    """Right multiplication by H_i (sign +1) or H_i^-1 = H_i + (v - v^-1) (sign -1)."""
    if not 1 <= i <= x.n - 1:
        raise ValueError(f"generator {i} out of range for n = {x.n}")
    out: dict = {}

    def add(w, c):
        if w in out:
            s = out[w] + c
            if s:
                out[w] = s
            else:
                del out[w]
        else:
            out[w] = c

    for w, c in x.terms.items():
        ws = list(w)
        ws[i - 1], ws[i] = ws[i], ws[i - 1]
        ws = tuple(ws)
        add(ws, c)
        if w[i - 1] > w[i]:
            add(w, c * _GAP)
        if sign < 0:
            add(w, -c * _GAP)
    return HeckeElement(x.n, out)


def braid_to_hecke(b: BraidWord) -> HeckeElement:
    x = HeckeElement.one(b.strands)
    for a in b.letters:
        x = mul_generator(x, abs(a), 1 if a > 0 else -1)
    return x


# -- trace -------------------------------------------------------------
# Trace values are kept as polynomials in sigma = tau(one strand) with Laurent
# coefficients: {power: LaurentPoly}. This keeps the recursion cheap.

def _poly_add(p, q, scale=None):
    out = dict(p)
    for e, c in q.items():
        c = c * scale if scale is not None else c
        s = out[e] + c if e in out else c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


@lru_cache(maxsize=None)
def _trace_basis(w: tuple[int, ...]) -> tuple:
    n = len(w)
    if n == 0:
        return ((0, LaurentPoly.const(1)),)
    top = n - 1
    if w[top] == top:
        return tuple((e + 1, c) for e, c in _trace_basis(w[:top]))
    # w = u s_{n-1} s_{n-2} ... s_j with j - 1 = w^-1(top)
    j = w.index(top) + 1
    # u = w c^-1 where c = s_{n-1} ... s_j; c^-1 sends top -> j-1 and x -> x+1 on [j-1, n-2]
    cinv = list(range(n))
    for x in range(j - 1, top):
        cinv[x] = x + 1
    cinv[top] = j - 1
    u = tuple(w[cinv[x]] for x in range(n))
    assert u[top] == top
    y = HeckeElement.basis(u[:top])
    for i in range(top - 1, j - 1, -1):
        y = mul_generator(y, i)
    inner = trace_sigma_poly(y)
    vinv = V.bar()
    return tuple((e, c * vinv) for e, c in sorted(inner.items()))


def trace_sigma_poly(x: HeckeElement) -> dict:
    """tau(x) as ``{power of sigma: Laurent coefficient}``."""
    total: dict = {}
    for w, c in x.terms.items():
        total = _poly_add(total, dict(_trace_basis(w)), c)
    return total


def sigma(names=("v", "h")) -> MultiRational:
    """tau(1) on one strand: (1 + h v^2) / (1 - v^2)."""
    v = MultiRational.gen("v", names)
    h = MultiRational.gen("h", names)
    return (1 + h * v**2) / (1 - v**2)


def _eval_sigma_poly(poly: dict, sig: MultiRational, names) -> MultiRational:
    total = MultiRational.const(0, names)
    for e, c in poly.items():
        total = total + MultiRational.from_laurent(c, names) * sig**e
    return total


def ocneanu_trace(x: HeckeElement) -> MultiRational:
    """The Markov trace as a rational function of v and h."""
    names = ("v", "h")
    return _eval_sigma_poly(trace_sigma_poly(x), sigma(names), names)


def trace_symmetry_check(x: HeckeElement, y: HeckeElement) -> bool:
    return trace_sigma_poly(x * y) == trace_sigma_poly(y * x)


def homfly(b: BraidWord) -> MultiRational:
    """HOMFLY-PT in (v, a): a^(e-n) v^n tau(b) with h = -a^2 v^-2.

    With this normalization the unknot is (a - a^-1)/(v - v^-1), not 1.
    """
    names = ("v", "a")
    v = MultiRational.gen("v", names)
    a = MultiRational.gen("a", names)
    sig = (1 - a**2) / (1 - v**2)
    tau = _eval_sigma_poly(trace_sigma_poly(braid_to_hecke(b)), sig, names)
    return tau * a ** (exponent_sum(b) - b.strands) * v**b.strands


def homfly_specialized(b: BraidWord, k: int) -> MultiRational:
    """HOMFLY-PT at a = v^k, as a rational function of v alone."""
    names = ("v",)
    v = MultiRational.gen("v", names)
    a = v**k
    sig = (1 - a**2) / (1 - v**2)
    tau = _eval_sigma_poly(trace_sigma_poly(braid_to_hecke(b)), sig, names)
    return tau * a ** (exponent_sum(b) - b.strands) * v**b.strands


def standard_functional(x: HeckeElement) -> LaurentPoly:
    """The linear functional H_w -> v^(-length(w))."""
    total = LaurentPoly()
    for w, c in x.terms.items():
        total = total + c.shift(-length(w))
    return total
