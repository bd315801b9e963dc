"""Quantum gl_k: the natural representation, exterior powers and their intertwiners.

Every tensor factor is an exterior power ``wedge^d W`` (the natural module is
``d = 1``). A basis vector of a factor is a strictly decreasing tuple of
indices in ``1..k``; a basis vector of a tensor product is a tuple of such
tuples. Vectors are sparse dicts ``{basis: coefficient}`` and linear maps store
sparse columns, so coefficients may be Laurent polynomials or rational
functions interchangeably.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product

from .algebra import LaurentPoly, MultiRational, V, quantum_int

__all__ = [
    "RepContext",
    "TensorSpace",
    "LinearMap",
    "wedge_basis",
    "generator_action",
    "factor_action",
    "coproduct_action",
    "braid_action",
    "exterior_power_basis",
    "wedge_map",
    "shuffle_map",
    "cupcap",
    "hecke_local",
    "jones_wenzl",
    "embed",
    "apply_local",
]

ONE = LaurentPoly.const(1)


@dataclass(frozen=True)
class RepContext:
    """Rank ``k`` and the sign ``eta`` selecting V_+ or V_-."""

    k: int
    eta: int = -1

    def __post_init__(self):
        if self.k < 1 or self.eta not in (1, -1):
            raise ValueError("need k >= 1 and eta = +-1")

    @property
    def gamma(self) -> LaurentPoly:
        """eta * v^(-eta): -v for V_-, v^-1 for V_+."""
        return LaurentPoly.monomial(-self.eta, self.eta)

    @property
    def eigenvalue(self) -> LaurentPoly:
        """-gamma^-1, the eigenvalue of H_i on exterior powers."""
        return -(self.gamma**-1)

    def neg_gamma_pow(self, e: int) -> LaurentPoly:
        return (-self.gamma) ** e

    @property
    def top_unit(self) -> LaurentPoly:
        """The scalar attached to the top exterior power: v^(k-1) for V_-, 1 for V_+."""
        return V ** (self.k - 1) if self.eta == -1 else ONE


# -- spaces -------------------------------------------------------------

@lru_cache(maxsize=None)
def wedge_basis(k: int, d: int) -> tuple[tuple[int, ...], ...]:
    """Strictly decreasing d-tuples in 1..k (empty when d > k or d < 0)."""
    if d < 0 or d > k:
        return ()
    return tuple(combinations(range(k, 0, -1), d))


@dataclass(frozen=True)
class TensorSpace:
    labels: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))

    def basis(self) -> list[tuple]:
        return list(product(*(wedge_basis(self.k, d) for d in self.labels)))

    @property
    def dim(self) -> int:
        out = 1
        for d in self.labels:
            out *= len(wedge_basis(self.k, d))
        return out


def _acc(vec: dict, key, c):
    if key in vec:
        s = vec[key] + c
        if s:
            vec[key] = s
        else:
            del vec[key]
    elif c:
        vec[key] = c


class LinearMap:
    """Sparse linear map between tensor spaces: ``cols[basis] = {basis: coeff}``."""

    __slots__ = ("dom", "cod", "cols")

    def __init__(self, dom: TensorSpace, cod: TensorSpace, cols: dict | None = None):
        self.dom = dom
        self.cod = cod
        self.cols = {}
        for b, col in (cols or {}).items():
            clean = {r: c for r, c in col.items() if c}
            if clean:
                self.cols[b] = clean

    @classmethod
    def identity(cls, space: TensorSpace) -> LinearMap:
        return cls(space, space, {b: {b: ONE} for b in space.basis()})

    @classmethod
    def zero(cls, dom: TensorSpace, cod: TensorSpace) -> LinearMap:
        return cls(dom, cod, {})

    def apply(self, vec: dict) -> dict:
        out: dict = {}
        for b, c in vec.items():
            for r, a in self.cols.get(b, {}).items():
                _acc(out, r, a * c)
        return out

    def __matmul__(self, other: LinearMap) -> LinearMap:
        """Composition: ``(self @ other)(x) = self(other(x))``."""
        if other.cod.labels != self.dom.labels:
            raise ValueError(f"cannot compose {other.cod.labels} into {self.dom.labels}")
        return LinearMap(other.dom, self.cod, {b: self.apply(col) for b, col in other.cols.items()})

    def __add__(self, other: LinearMap) -> LinearMap:
        self._check_same(other)
        cols = {b: dict(col) for b, col in self.cols.items()}
        for b, col in other.cols.items():
            tgt = cols.setdefault(b, {})
            for r, c in col.items():
                _acc(tgt, r, c)
        return LinearMap(self.dom, self.cod, cols)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> LinearMap:
        return LinearMap(self.dom, self.cod,
                         {b: {r: a * c for r, a in col.items()} for b, col in self.cols.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def tensor(self, other: LinearMap) -> LinearMap:
        dom = TensorSpace(self.dom.labels + other.dom.labels, self.dom.k)
        cod = TensorSpace(self.cod.labels + other.cod.labels, self.cod.k)
        cols = {}
        for b1, c1 in self.cols.items():
            for b2, c2 in other.cols.items():
                cols[b1 + b2] = {r1 + r2: a1 * a2 for r1, a1 in c1.items() for r2, a2 in c2.items()}
        return LinearMap(dom, cod, cols)

    def _check_same(self, other):
        if self.dom.labels != other.dom.labels or self.cod.labels != other.cod.labels:
            raise ValueError("maps between different spaces")

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        if self.dom.labels != other.dom.labels or self.cod.labels != other.cod.labels:
            return False
        return (self - other).is_zero()

    def is_zero(self) -> bool:
        return not self.cols

    def scalar(self):
        """The c with self = c * id, or None."""
        if self.dom.labels != self.cod.labels:
            return None
        basis = self.dom.basis()
        if not basis:
            return LaurentPoly()
        c = self.cols.get(basis[0], {}).get(basis[0], 0)
        return c if self == LinearMap.identity(self.dom).scale(c) else None

    def __repr__(self):
        return f"LinearMap({self.dom.labels} -> {self.cod.labels}, nnz={sum(map(len, self.cols.values()))})"


def apply_local(vec: dict, op: LinearMap, pos: int) -> dict:
    """Apply ``op`` to the factors ``pos .. pos + width - 1`` of every basis tensor."""
    width = len(op.dom.labels)
    out: dict = {}
    for b, c in vec.items():
        head, mid, tail = b[:pos], b[pos:pos + width], b[pos + width:]
        for r, a in op.cols.get(mid, {}).items():
            _acc(out, head + r + tail, a * c)
    return out


def embed(op: LinearMap, labels, pos: int) -> LinearMap:
    """``id (x) op (x) id`` on the tensor space with the given labels."""
    labels = tuple(labels)
    width = len(op.dom.labels)
    if labels[pos:pos + width] != op.dom.labels:
        raise ValueError("local operator does not match the labels")
    k = op.dom.k
    dom = TensorSpace(labels, k)
    cod = TensorSpace(labels[:pos] + op.cod.labels + labels[pos + width:], k)
    cols = {b: apply_local({b: ONE}, op, pos) for b in dom.basis()}
    return LinearMap(dom, cod, cols)


# -- generators on the natural module -----------------------------------

def generator_action(ctx: RepContext, gen: str, i: int) -> LinearMap:
    """E_i, F_i, D_j, Dinv_j and the group-like K_i (Kinv) on a single natural factor.

    K_i scales e_i by gamma and e_{i+1} by gamma^-1. It is the group-like element
    in the coproduct of E_i and F_i that makes the R-matrix H an intertwiner.
    """
    k = ctx.k
    sp = TensorSpace((1,), k)
    cols: dict = {}
    sign = 1 if ctx.eta == 1 else -1
    if gen in ("E", "F", "K", "Kinv") and not 1 <= i <= k - 1:
        raise ValueError(f"{gen}_{i} out of range for k = {k}")
    if gen in ("D", "Dinv") and not 1 <= i <= k:
        raise ValueError(f"{gen}_{i} out of range for k = {k}")
    for r in range(1, k + 1):
        b = ((r,),)
        if gen == "E":
            if ctx.eta == 1 and r == i:
                cols[b] = {((i + 1,),): ONE}
            elif ctx.eta == -1 and r == i + 1:
                cols[b] = {((i,),): ONE}
        elif gen == "F":
            if ctx.eta == 1 and r == i + 1:
                cols[b] = {((i,),): ONE}
            elif ctx.eta == -1 and r == i:
                cols[b] = {((i + 1,),): -ONE}
        elif gen == "D":
            cols[b] = {b: LaurentPoly.monomial(int(r == i), sign)}
        elif gen == "Dinv":
            cols[b] = {b: LaurentPoly.monomial(-int(r == i), sign)}
        elif gen in ("K", "Kinv"):
            g = ctx.gamma if gen == "K" else ctx.gamma**-1
            cols[b] = {b: g if r == i else g**-1 if r == i + 1 else ONE}
        else:
            raise ValueError(f"unknown generator {gen}")
    return LinearMap(sp, sp, cols)


def _natural_coproduct(ctx: RepContext, gen: str, i: int, n: int) -> LinearMap:
    """Iterated coproduct of a generator on n natural factors."""
    sp = TensorSpace((1,) * n, ctx.k)
    one = generator_action(ctx, gen, i)
    if gen in ("D", "Dinv", "K", "Kinv"):
        vecs = {}
        for b in sp.basis():
            c = ONE
            for f in b:
                c = c * one.cols[(f,)][(f,)]
            vecs[b] = {b: c}
        return LinearMap(sp, sp, vecs)
    K = generator_action(ctx, "K", i)
    Kinv = generator_action(ctx, "Kinv", i)
    total = LinearMap.zero(sp, sp)
    for p in range(n):
        if gen == "E":
            # K^(p) (x) E (x) 1^(rest)
            factors = [K] * p + [one] + [LinearMap.identity(TensorSpace((1,), ctx.k))] * (n - p - 1)
        else:
            # 1^(p) (x) F (x) Kinv^(rest)
            factors = [LinearMap.identity(TensorSpace((1,), ctx.k))] * p + [one] + [Kinv] * (n - p - 1)
        term = factors[0]
        for f in factors[1:]:
            term = term.tensor(f)
        total = total + term
    return total


@lru_cache(maxsize=None)
def factor_action(ctx: RepContext, gen: str, i: int, d: int) -> LinearMap:
    """A generator acting on a single exterior power, via its embedding."""
    sp = TensorSpace((d,), ctx.k)
    if d == 0:
        if gen in ("E", "F"):
            return LinearMap.zero(sp, sp)
        return LinearMap.identity(sp)
    if d == 1:
        return generator_action(ctx, gen, i)
    iota = exterior_power_basis(ctx, d)
    act = _natural_coproduct(ctx, gen, i, d)
    return _read(ctx, d) @ act @ iota


def coproduct_action(ctx: RepContext, gen: str, i: int, labels) -> LinearMap:
    """The iterated coproduct of a generator on a tensor product of exterior powers."""
    labels = tuple(labels)
    acts = [factor_action(ctx, gen, i, d) for d in labels]
    if not labels:
        sp = TensorSpace((), ctx.k)
        return LinearMap.identity(sp) if gen not in ("E", "F") else LinearMap.zero(sp, sp)
    if gen in ("D", "Dinv", "K", "Kinv"):
        out = acts[0]
        for a in acts[1:]:
            out = out.tensor(a)
        return out
    Ks = [factor_action(ctx, "K" if gen == "E" else "Kinv", i, d) for d in labels]
    ids = [LinearMap.identity(TensorSpace((d,), ctx.k)) for d in labels]
    sp = TensorSpace(labels, ctx.k)
    total = LinearMap.zero(sp, sp)
    for p in range(len(labels)):
        if gen == "E":
            factors = Ks[:p] + [acts[p]] + ids[p + 1:]
        else:
            factors = ids[:p] + [acts[p]] + Ks[p + 1:]
        term = factors[0]
        for f in factors[1:]:
            term = term.tensor(f)
        total = total + term
    return total


# -- braiding -------------------------------------------------------------

@lru_cache(maxsize=None)
def _hecke_local(ctx: RepContext, sign: int) -> LinearMap:
    sp = TensorSpace((1, 1), ctx.k)
    gap = V.bar() - V
    cols = {}
    for a in range(1, ctx.k + 1):
        for b in range(1, ctx.k + 1):
            src = ((a,), (b,))
            if a > b:
                col = {((b,), (a,)): ONE}
            elif a < b:
                col = {((b,), (a,)): ONE, src: gap}
            else:
                col = {src: ctx.gamma}
            if sign < 0:
                # H^-1 = H + (v - v^-1)
                col = dict(col)
                _acc(col, src, -gap)
            cols[src] = col
    return LinearMap(sp, sp, cols)


def braid_action(ctx: RepContext, i: int, n: int, sign: int = 1) -> LinearMap:
    """H_i (or its inverse) on n natural factors."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"braid generator {i} out of range for {n} factors")
    return embed(_hecke_local(ctx, sign), (1,) * n, i - 1)


def hecke_local(ctx: RepContext, sign: int = 1) -> LinearMap:
    """H (or H^-1) on W (x) W."""
    return _hecke_local(ctx, sign)


# -- exterior powers ---------------------------------------------------------

def _inversions(seq) -> int:
    """Pairs out of decreasing order."""
    return sum(1 for p in range(len(seq)) for q in range(p + 1, len(seq)) if seq[p] < seq[q])


@lru_cache(maxsize=None)
def exterior_power_basis(ctx: RepContext, d: int) -> LinearMap:
    """The embedding of wedge^d W into W^(x)d."""
    dom = TensorSpace((d,), ctx.k)
    cod = TensorSpace((1,) * d, ctx.k)
    cols = {}
    for idx in wedge_basis(ctx.k, d):
        col = {}
        for perm in set(permutations(idx)):
            col[tuple((r,) for r in perm)] = ctx.neg_gamma_pow(-_inversions(perm))
        cols[(idx,)] = col
    return LinearMap(dom, cod, cols)


@lru_cache(maxsize=None)
def _read(ctx: RepContext, d: int) -> LinearMap:
    """Left inverse of the embedding: read off the decreasing-tensor coefficient."""
    dom = TensorSpace((1,) * d, ctx.k)
    cod = TensorSpace((d,), ctx.k)
    return LinearMap(dom, cod, {tuple((r,) for r in idx): {(idx,): ONE}
                                for idx in wedge_basis(ctx.k, d)})


def _split_inversions(S, T) -> int:
    return sum(1 for s in S for t in T if s < t)


def _wedge_constant(ctx: RepContext, a: int, b: int) -> LaurentPoly:
    if a == 0 or b == 0:
        return ONE
    return ctx.top_unit if a + b == ctx.k else ONE


def _shuffle_constant(ctx: RepContext, a: int, b: int) -> LaurentPoly:
    if a == 0 or b == 0:
        return ONE
    c = ctx.neg_gamma_pow(a * b)
    return c * ctx.top_unit**-1 if a + b == ctx.k else c


@lru_cache(maxsize=None)
def wedge_map(ctx: RepContext, a: int, b: int) -> LinearMap:
    """q-wedging wedge^a (x) wedge^b -> wedge^(a+b)."""
    dom = TensorSpace((a, b), ctx.k)
    cod = TensorSpace((a + b,), ctx.k)
    const = _wedge_constant(ctx, a, b)
    cols = {}
    if a + b <= ctx.k:
        for S, T in dom.basis():
            if set(S) & set(T):
                continue
            merged = tuple(sorted(S + T, reverse=True))
            cols[(S, T)] = {(merged,): const * ctx.neg_gamma_pow(-_split_inversions(S, T))}
    return LinearMap(dom, cod, cols)


@lru_cache(maxsize=None)
def shuffle_map(ctx: RepContext, a: int, b: int) -> LinearMap:
    """q-shuffling wedge^(a+b) -> wedge^a (x) wedge^b."""
    dom = TensorSpace((a + b,), ctx.k)
    cod = TensorSpace((a, b), ctx.k)
    const = _shuffle_constant(ctx, a, b)
    cols = {}
    for (idx,) in dom.basis():
        col = {}
        for S in combinations(idx, a):
            T = tuple(x for x in idx if x not in S)
            col[(S, T)] = const * ctx.neg_gamma_pow(-_split_inversions(S, T))
        cols[(idx,)] = col
    return LinearMap(dom, cod, cols)


def cupcap(ctx: RepContext) -> LinearMap:
    """shuffle(1,1) after wedge(1,1) on W (x) W; equals H - gamma."""
    return shuffle_map(ctx, 1, 1) @ wedge_map(ctx, 1, 1)


@lru_cache(maxsize=None)
def jones_wenzl(m: int) -> LinearMap:
    """The Jones-Wenzl idempotent on W^(x)m for k = 2, V_+ (rational-function entries)."""
    if m < 1:
        raise ValueError("jones_wenzl needs m >= 1")
    ctx = RepContext(2, 1)
    sp = TensorSpace((1,) * m, 2)
    if m == 1:
        return LinearMap.identity(sp)
    prev = jones_wenzl(m - 1).tensor(LinearMap.identity(TensorSpace((1,), 2)))
    U = embed(cupcap(ctx), (1,) * m, m - 2)
    coeff = MultiRational.from_laurent(quantum_int(m - 1)) / MultiRational.from_laurent(quantum_int(m))
    return prev + (prev @ U @ prev).scale(coeff)
