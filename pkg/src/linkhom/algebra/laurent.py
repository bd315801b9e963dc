"""Sparse Laurent polynomials in a single variable ``v`` with rational coefficients."""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

__all__ = ["LaurentPoly", "quantum_int", "quantum_binomial", "quantum_factorial", "V"]


def _norm(c):
    # keep integers as ints so that arithmetic stays cheap
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class LaurentPoly:
    """Immutable element of Q[v, v^-1] stored as ``{exponent: coefficient}``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[int(e)] = _norm(c)
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def monomial(cls, exp: int, coeff=1) -> LaurentPoly:
        return cls({exp: coeff})

    @classmethod
    def const(cls, c) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def coerce(cls, x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (int, Rational)):
            return cls({0: x})
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # -- inspection ---------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, exp: int):
        return self._terms.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def min_degree(self) -> int:
        return min(self._terms)

    def max_degree(self) -> int:
        return max(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __bool__(self):
        return bool(self._terms)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            if isinstance(other, (int, Rational)):
                other = LaurentPoly.const(other)
            else:
                return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (LaurentPoly, int, Rational)):
            return NotImplemented
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other):
        if not isinstance(other, (int, Rational)):
            return NotImplemented
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            if not other:
                return LaurentPoly()
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials are invertible in Q[v, v^-1]")
            (e, c), = self._terms.items()
            return LaurentPoly({e * n: Fraction(1) / Fraction(c) ** (-n)})
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``v**k``."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def bar(self) -> LaurentPoly:
        """The involution v -> v^-1."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def subs_sign(self) -> LaurentPoly:
        """v -> -v."""
        return LaurentPoly({e: (-c if e % 2 else c) for e, c in self._terms.items()})

    def divmod_exact(self, other: LaurentPoly) -> LaurentPoly:
        """Exact division; raises ArithmeticError when ``other`` does not divide ``self``."""
        other = LaurentPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        rem = dict(self._terms)
        quot: dict = {}
        top = other.max_degree()
        lead = Fraction(other._terms[top])
        low = other.min_degree()
        floor = self.min_degree() - low if rem else 0
        while rem:
            e = max(rem)
            k = e - top
            if k < floor:
                break
            q = Fraction(rem[e]) / lead
            quot[k] = _norm(q)
            for e2, c2 in other._terms.items():
                val = rem.get(e2 + k, 0) - q * c2
                if val:
                    rem[e2 + k] = _norm(val)
                else:
                    rem.pop(e2 + k, None)
        if rem:
            raise ArithmeticError("inexact Laurent polynomial division")
        return LaurentPoly(quot)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return LaurentPoly({e: Fraction(c) / other for e, c in self._terms.items()})
        if isinstance(other, LaurentPoly):
            if other.is_monomial():
                (e, c), = other._terms.items()
                return LaurentPoly({k - e: Fraction(a) / c for k, a in self._terms.items()})
            return self.divmod_exact(other)
        return NotImplemented

    def evaluate(self, x):
        return sum((c * x**e for e, c in self._terms.items()), 0)

    # -- comparison / hashing ----------------------------------------
    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- rendering ----------------------------------------------------
    def __str__(self):
        """Canonical text form, increasing exponents: ``v^-2 + 2 + v^2``."""
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items()):
            if e == 0:
                mono = ""
            elif e == 1:
                mono = "v"
            else:
                mono = f"v^{e}"
            if mono and c == 1:
                body, neg = mono, False
            elif mono and c == -1:
                body, neg = mono, True
            else:
                neg = c < 0
                mag = -c if neg else c
                body = f"{mag}{'*' + mono if mono else ''}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Inverse of ``str`` for the canonical rendering."""
        text = text.replace(" ", "")
        if text == "0":
            return cls()
        out: dict = {}
        for sign, body in re.findall(r"([+-]?)([^+-]+)", _protect(text)):
            body = body.replace("~", "-")
            if "v" in body:
                coeff_part, _, mono = body.partition("v")
                coeff_part = coeff_part.rstrip("*")
                coeff = Fraction(coeff_part) if coeff_part else Fraction(1)
                exp = int(mono[1:]) if mono.startswith("^") else 1
            else:
                coeff, exp = Fraction(body), 0
            if sign == "-":
                coeff = -coeff
            out[exp] = out.get(exp, 0) + coeff
        return cls(out)


def _protect(text: str) -> str:
    # hide the minus sign of negative exponents from the term splitter
    return text.replace("^-", "^~")


V = LaurentPoly.monomial(1)


def quantum_int(a: int) -> LaurentPoly:
    """The quantum number [a] = v^(a-1) + v^(a-3) + ... + v^(1-a); [-a] = -[a]."""
    if a < 0:
        return -quantum_int(-a)
    return LaurentPoly({a - 1 - 2 * j: 1 for j in range(a)})


def quantum_factorial(n: int) -> LaurentPoly:
    out = LaurentPoly.const(1)
    for j in range(1, n + 1):
        out = out * quantum_int(j)
    return out


def quantum_binomial(n: int, k: int) -> LaurentPoly:
    if not 0 <= k <= n:
        raise ValueError("quantum_binomial requires 0 <= k <= n")
    num = quantum_factorial(n)
    den = quantum_factorial(k) * quantum_factorial(n - k)
    try:
        return num.divmod_exact(den)
    except ArithmeticError as exc:  # pragma: no cover - would be an internal bug
        raise ArithmeticError(f"quantum binomial ({n},{k}) not exact") from exc
