"""Multivariate rational functions over Q in a declared variable set.

Backed by sympy's sparse fraction fields, which keep numerator and denominator
reduced after every operation.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from sympy import QQ, Rational as SymRational, symbols
from sympy.polys.fields import field

from .laurent import LaurentPoly

__all__ = ["MultiRational", "rational_field"]


@lru_cache(maxsize=None)
def rational_field(names: tuple[str, ...]):
    """The fraction field Q(names) together with its generators."""
    K, *gens = field(",".join(names), QQ)
    return K, tuple(gens)


def _q(c):
    if isinstance(c, Fraction):
        return QQ(c.numerator, c.denominator)
    return QQ(c)


class MultiRational:
    """Element of Q(x, y, ...) with a fixed, ordered variable tuple."""

    __slots__ = ("names", "el")

    def __init__(self, el, names: tuple[str, ...] = ("v",)):
        self.names = tuple(names)
        self.el = el

    # -- constructors -------------------------------------------------
    @classmethod
    def field(cls, names=("v",)):
        return rational_field(tuple(names))[0]

    @classmethod
    def const(cls, c, names=("v",)) -> MultiRational:
        K, _ = rational_field(tuple(names))
        return cls(K(_q(c)), names)

    @classmethod
    def gen(cls, name: str, names=("v",)) -> MultiRational:
        K, gens = rational_field(tuple(names))
        return cls(gens[tuple(names).index(name)], names)

    @classmethod
    def from_laurent(cls, p: LaurentPoly, names=("v",), var: str = "v") -> MultiRational:
        K, gens = rational_field(tuple(names))
        x = gens[tuple(names).index(var)]
        el = K(0)
        for e, c in p.items():
            el += _q(c) * x**e
        return cls(el, names)

    @classmethod
    def coerce(cls, x, names=("v",)) -> MultiRational:
        if isinstance(x, MultiRational):
            if x.names != tuple(names):
                return x.in_vars(names)
            return x
        if isinstance(x, LaurentPoly):
            return cls.from_laurent(x, names)
        if isinstance(x, (int, Rational)):
            return cls.const(x, names)
        raise TypeError(f"cannot coerce {type(x).__name__} to MultiRational")

    def in_vars(self, names) -> MultiRational:
        """Re-home into a larger (or reordered) variable set."""
        names = tuple(names)
        if names == self.names:
            return self
        K, _ = rational_field(names)
        return MultiRational(K.from_expr(self.el.as_expr()), names)

    # -- structure ----------------------------------------------------
    @property
    def numerator(self):
        return self.el.numer

    @property
    def denominator(self):
        return self.el.denom

    def is_zero(self) -> bool:
        return not self.el

    def __bool__(self):
        return bool(self.el)

    def _other(self, other):
        if isinstance(other, MultiRational):
            if other.names == self.names:
                return other
            return other.in_vars(self.names)
        if isinstance(other, (LaurentPoly, int, Rational)):
            return MultiRational.coerce(other, self.names)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return MultiRational(self.el + o.el, self.names)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return MultiRational(self.el - o.el, self.names)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return MultiRational(o.el - self.el, self.names)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return MultiRational(self.el * o.el, self.names)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if not o.el:
            raise ZeroDivisionError("division by zero rational function")
        return MultiRational(self.el / o.el, self.names)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return MultiRational(-self.el, self.names)

    def __pow__(self, k: int):
        return MultiRational(self.el**k, self.names)

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.el == o.el

    def __hash__(self):
        return hash((self.names, str(self.el)))

    # -- conversions --------------------------------------------------
    def subs(self, mapping: dict, names=None) -> MultiRational:
        """Substitute variables by MultiRationals (all in the target variable set)."""
        names = tuple(names or self.names)
        K, _ = rational_field(names)
        syms = {n: symbols(n) for n in self.names}
        expr = self.el.as_expr()
        repl = {syms[k]: MultiRational.coerce(v, names).el.as_expr() for k, v in mapping.items()}
        return MultiRational(K.from_expr(expr.subs(repl, simultaneous=True)), names)

    def to_laurent(self, var: str = "v") -> LaurentPoly:
        """Exact conversion when this is a Laurent polynomial in a single variable."""
        if len(self.names) != 1 or self.names[0] != var:
            other = [n for n in self.names if n != var]
            if other and any(self.el.numer.degree(self.names.index(n)) > 0 for n in other):
                raise ValueError("not a Laurent polynomial in " + var)
        idx = self.names.index(var)
        den = self.el.denom
        if len(den.terms()) != 1:
            raise ValueError(f"{self} is not a Laurent polynomial")
        (dmono, dcoeff), = den.terms()
        out = {}
        for mono, c in self.el.numer.terms():
            e = mono[idx] - dmono[idx]
            out[e] = Fraction(int(c.numerator), int(c.denominator)) / Fraction(
                int(dcoeff.numerator), int(dcoeff.denominator))
        return LaurentPoly(out)

    def is_laurent(self, var: str = "v") -> bool:
        try:
            self.to_laurent(var)
        except ValueError:
            return False
        return True

    def evaluate(self, **values):
        """Numeric/rational evaluation, e.g. ``r.evaluate(v=2, h=3)``."""
        expr = self.el.as_expr()
        subs = {symbols(k): SymRational(str(Fraction(val))) if isinstance(val, (int, Fraction)) else val
                for k, val in values.items()}
        return expr.subs(subs)

    def __str__(self):
        return str(self.el.as_expr())

    def __repr__(self):
        return f"MultiRational({self}, vars={','.join(self.names)})"
