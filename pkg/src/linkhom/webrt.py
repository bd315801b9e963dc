"""Sliced webs, their evaluation into exterior powers, ladders, and link evaluation.

A web word is a label sequence plus a list of slices read bottom to top. Each
slice is a merge, a split, or a crossing of two 1-labelled strands at a given
position; identities fill the remaining strands.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import LaurentPoly, MultiRational, quantum_int
from .braid import BraidWord
from .qrep import (
    ONE,
    LinearMap,
    RepContext,
    TensorSpace,
    apply_local,
    embed,
    hecke_local,
    jones_wenzl,
    shuffle_map,
    wedge_map,
)

__all__ = [
    "WebParseError",
    "Slice",
    "WebWord",
    "parse_web",
    "phi_eval",
    "closed_web_value",
    "braiding_web",
    "braiding_map",
    "ladder_web",
    "ladder_action",
    "closure_web",
    "wrt_eval",
    "colored_jones",
]


class WebParseError(ValueError):
    """Malformed web word text or a slice that does not fit the running labels."""


@dataclass(frozen=True)
class Slice:
    kind: str  # "merge", "split", "x+", "x-"
    pos: int
    a: int = 1
    b: int = 1

    def __str__(self):
        if self.kind in ("merge", "split"):
            return f"{self.kind} {self.a} {self.b} @{self.pos}"
        return f"{self.kind} @{self.pos}"

    def apply_labels(self, labels: tuple[int, ...]) -> tuple[int, ...]:
        p = self.pos
        if self.kind == "merge":
            if labels[p:p + 2] != (self.a, self.b):
                raise WebParseError(f"merge {self.a} {self.b} does not fit labels {labels} at {p}")
            return labels[:p] + (self.a + self.b,) + labels[p + 2:]
        if self.kind == "split":
            if labels[p:p + 1] != (self.a + self.b,):
                raise WebParseError(f"split {self.a} {self.b} does not fit labels {labels} at {p}")
            return labels[:p] + (self.a, self.b) + labels[p + 1:]
        if labels[p:p + 2] != (1, 1):
            raise WebParseError(f"crossings need two 1-labelled strands, got {labels} at {p}")
        return labels


@dataclass(frozen=True)
class WebWord:
    labels: tuple[int, ...]
    slices: tuple[Slice, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "slices", tuple(self.slices))
        if any(x < 0 for x in self.labels):
            raise WebParseError("labels must be nonnegative")
        self.codomain()

    def codomain(self) -> tuple[int, ...]:
        labels = self.labels
        for s in self.slices:
            if not 0 <= s.pos < len(labels):
                raise WebParseError(f"slice position {s.pos} out of range for {labels}")
            labels = s.apply_labels(labels)
        return labels

    def then(self, *slices: Slice) -> WebWord:
        return WebWord(self.labels, self.slices + tuple(slices))

    def __str__(self):
        lines = ["labels: " + " ".join(map(str, self.labels))]
        lines += [str(s) for s in self.slices]
        return "\n".join(lines)


def parse_web(text: str) -> WebWord:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("labels:"):
        raise WebParseError("a web word starts with 'labels: ...'")
    try:
        labels = tuple(int(t) for t in lines[0][len("labels:"):].split())
        slices = []
        for ln in lines[1:]:
            toks = ln.split()
            if not toks[-1].startswith("@"):
                raise WebParseError(f"missing @position in {ln!r}")
            pos = int(toks[-1][1:])
            if toks[0] in ("merge", "split") and len(toks) == 4:
                slices.append(Slice(toks[0], pos, int(toks[1]), int(toks[2])))
            elif toks[0] in ("x+", "x-") and len(toks) == 2:
                slices.append(Slice(toks[0], pos))
            else:
                raise WebParseError(f"unknown slice {ln!r}")
    except ValueError as exc:
        if isinstance(exc, WebParseError):
            raise
        raise WebParseError(f"malformed integer in web word: {exc}") from exc
    return WebWord(labels, tuple(slices))


def _crossing(ctx: RepContext, kind: str) -> LinearMap:
    # x+ = -(-gamma)^-k H and x- = -(-gamma)^k H^-1; for V_- this is -v^-k H and -v^k H^-1
    unit = ctx.neg_gamma_pow(ctx.k)  # a signed monomial, so bar() is its inverse
    if kind == "x+":
        return hecke_local(ctx, 1).scale(-unit.bar())
    return hecke_local(ctx, -1).scale(-unit)


def _local(ctx: RepContext, s: Slice) -> LinearMap:
    if s.kind == "merge":
        return wedge_map(ctx, s.a, s.b)
    if s.kind == "split":
        return shuffle_map(ctx, s.a, s.b)
    return _crossing(ctx, s.kind)


def _check_labels(w: WebWord, ctx: RepContext):
    labels = w.labels
    for s in w.slices:
        if any(x > ctx.k for x in labels):
            break
        labels = s.apply_labels(labels)
    if any(x > ctx.k for x in w.labels) or any(x > ctx.k for x in w.codomain()):
        raise WebParseError(f"labels exceed k = {ctx.k}")


def phi_eval(w: WebWord, ctx: RepContext) -> LinearMap:
    """The linear map of a web word (crossings evaluate to -v^-k H and -v^k H^-1)."""
    _check_labels(w, ctx)
    out = LinearMap.identity(TensorSpace(w.labels, ctx.k))
    labels = w.labels
    for s in w.slices:
        out = embed(_local(ctx, s), labels, s.pos) @ out
        labels = s.apply_labels(labels)
    return out


def phi_apply(w: WebWord, ctx: RepContext, vec: dict) -> dict:
    """Push one vector through a web word without building the full matrix."""
    for s in w.slices:
        vec = apply_local(vec, _local(ctx, s), s.pos)
    return vec


def _top(ctx: RepContext) -> tuple[int, ...]:
    return tuple(range(ctx.k, 0, -1))


def closed_web_value(w: WebWord, ctx: RepContext):
    """Scalar of a web between tensor powers of the top exterior power."""
    if any(x != ctx.k for x in w.labels) or any(x != ctx.k for x in w.codomain()):
        raise WebParseError("closed webs need every boundary label equal to k")
    e = tuple(_top(ctx) for _ in w.labels)
    out = phi_apply(w, ctx, {e: ONE})
    if set(out) - {e}:
        raise WebParseError("web does not evaluate to a scalar")
    return out.get(e, LaurentPoly())


# -- braiding and ladders -------------------------------------------------

def _h_ladder(a: int, r: int, b: int) -> WebWord:
    """The ladder web from (a, b) to (b, a) whose middle rung carries r."""
    if a <= b:
        return WebWord((a, b), (
            Slice("split", 0, a - r, r),
            Slice("merge", 1, r, b),
            Slice("split", 1, b - a + r, a),
            Slice("merge", 0, a - r, b - a + r),
        ))
    return WebWord((a, b), (
        Slice("split", 1, r, b - r),
        Slice("merge", 0, a, r),
        Slice("split", 0, b, a + r - b),
        Slice("merge", 1, a + r - b, b - r),
    ))


def braiding_web(a: int, b: int, ctx: RepContext) -> list[tuple[LaurentPoly, WebWord]]:
    """The braiding of wedge^a and wedge^b as a combination of ladder webs."""
    m = min(a, b)
    return [(ctx.gamma ** (m - r), _h_ladder(a, r, b)) for r in range(m + 1)]


def braiding_map(a: int, b: int, ctx: RepContext) -> LinearMap:
    total = None
    for c, w in braiding_web(a, b, ctx):
        term = phi_eval(w, ctx).scale(c)
        total = term if total is None else total + term
    return total


def ladder_web(gen: str, weight, i: int = 1) -> WebWord:
    """One-rung ladder moving a 1-labelled strand between columns i and i+1.

    ``E`` moves it from column i+1 to column i, ``F`` the other way.
    """
    a = tuple(weight)
    p = i - 1
    if gen == "E":
        return WebWord(a, (Slice("split", p + 1, 1, a[p + 1] - 1), Slice("merge", p, a[p], 1)))
    if gen == "F":
        return WebWord(a, (Slice("split", p, a[p] - 1, 1), Slice("merge", p + 1, 1, a[p + 1])))
    raise ValueError("ladder generator must be E or F")


def ladder_action(gen: str, weight, ctx: RepContext, i: int = 1) -> LinearMap:
    """E_i / F_i on the weight space, as the image of a ladder web.

    Weights leaving [0, k] give the zero map. For eta = +1 the rung carries
    (-1)^(label of the column it leaves); with that sign [E, F] = [a_i - a_{i+1}]
    on every weight space and ladders in different columns commute.
    """
    a = tuple(weight)
    p = i - 1
    step = 1 if gen == "E" else -1
    target = list(a)
    target[p] += step
    target[p + 1] -= step
    dom = TensorSpace(a, ctx.k)
    cod = TensorSpace(tuple(target), ctx.k)
    if min(a + tuple(target)) < 0 or max(a + tuple(target)) > ctx.k:
        return LinearMap.zero(dom, cod)
    out = phi_eval(ladder_web(gen, a, i), ctx)
    source = a[p + 1] if gen == "E" else a[p]
    if ctx.eta == 1 and source % 2:
        return out.scale(-1)
    return out


# -- link evaluation ---------------------------------------------------------

def closure_web(b: BraidWord, k: int) -> WebWord:
    """Compile a braid closure into a web word on (k, ..., k).

    Each closure strand is opened by splitting a k-label into (1, k-1); the
    (k-1)-partner is slid to the right past the unopened k-labels with the
    two-slice web that equals the plain swap. Partners end up nested.
    """
    n = b.strands
    labels = (k,) * n
    slices: list[Slice] = []
    for j in range(n):
        # labels: 1^j, k^(n-j), partners
        slices.append(Slice("split", j, 1, k - 1))
        # slide the new partner at j+1 past the n-j-1 remaining k-labels
        for q in range(j + 1, n):
            slices.append(Slice("split", q + 1, 1, k - 1))
            slices.append(Slice("merge", q, k - 1, 1))
    # read this way a positive letter is the x- slice, -(-gamma)^k H^-1
    for a in b.letters:
        slices.append(Slice("x-" if a > 0 else "x+", abs(a) - 1))
    for j in range(n - 1, -1, -1):
        # partner of strand j sits at position n; slide it left to j+1
        for q in range(n - 1, j, -1):
            slices.append(Slice("split", q, k - 1, 1))
            slices.append(Slice("merge", q + 1, 1, k - 1))
        slices.append(Slice("merge", j, 1, k - 1))
    return WebWord(labels, tuple(slices))


def wrt_eval(b: BraidWord, k: int, eta: int = -1) -> MultiRational:
    """The link value of a braid closure from webs and exterior powers."""
    ctx = RepContext(k, eta)
    w = closure_web(b, k)
    value = closed_web_value(w, ctx)
    return MultiRational.coerce(value)


def _cable(b: BraidWord, colors_by_position: list[int]) -> tuple[BraidWord, list[int]]:
    """Replace strand j by colors[j] parallel strands; return the cable and block starts."""
    cols = list(colors_by_position)
    letters: list[int] = []
    for a in b.letters:
        i = abs(a) - 1
        start = sum(cols[:i])
        m1, m2 = cols[i], cols[i + 1]
        sgn = 1 if a > 0 else -1
        # the block of m1 strands passes the block of m2 strands
        for r in range(m1):
            for s in range(m2):
                pos = start + m1 - 1 - r + s
                letters.append(sgn * (pos + 1))
        cols[i], cols[i + 1] = m2, m1
    starts = [sum(colors_by_position[:j]) for j in range(b.strands)]
    return BraidWord(max(1, sum(colors_by_position)), tuple(letters)), starts


def _colored_raw(b: BraidWord, colors: list[int]) -> MultiRational:
    comps = b.components()
    color_at = [0] * b.strands
    for c, cyc in enumerate(comps):
        for p in cyc:
            color_at[p] = colors[c]
    cab, starts = _cable(b, color_at)
    ctx = RepContext(2, 1)
    w = closure_web(cab, 2)
    opening = w.slices[:sum(1 + 2 * (cab.strands - 1 - j) for j in range(cab.strands))]
    rest = w.slices[len(opening):]
    e = tuple((2, 1) for _ in w.labels)
    vec = phi_apply(WebWord(w.labels, opening), ctx, {e: ONE})
    vec = {key: MultiRational.coerce(c) for key, c in vec.items()}
    for c, cyc in enumerate(comps):
        m = colors[c]
        if m > 1:
            vec = apply_local(vec, jones_wenzl(m), starts[cyc[0]])
    for s in rest:
        vec = apply_local(vec, _local(ctx, s), s.pos)
    return MultiRational.coerce(vec.get(e, 0))


def colored_jones(b: BraidWord, colors) -> MultiRational:
    """Coloured Jones polynomial by cabling with Jones-Wenzl projectors (k = 2, V_+).

    The V_+ evaluation is the V_- one under v -> -v^-1, so the cabled value is
    pulled back along that substitution. The blackboard framing of each cable
    is then removed with the once-twisted unknot, and the overall sign is fixed
    so that the colour-m unknot is [m+1]. All colours 1 recovers jones(b).
    """
    colors = list(colors)
    comps = b.components()
    if len(colors) != len(comps):
        raise ValueError(f"need {len(comps)} colours, got {len(colors)}")
    if any(m < 1 for m in colors):
        raise ValueError("colours must be positive")
    v = MultiRational.gen("v", ("v",))
    flip = {"v": -1 / v}

    def raw(braid, cols):
        return _colored_raw(braid, cols).subs(flip)

    value = raw(b, colors)
    comp_of = {}
    for c, cyc in enumerate(comps):
        for p in cyc:
            comp_of[p] = c
    # self-writhe per component, tracking strand identities through the word
    where = list(range(b.strands))  # where[pos] = strand (bottom position) now at pos
    writhe = [0] * len(comps)
    for a in b.letters:
        i = abs(a) - 1
        s1, s2 = where[i], where[i + 1]
        if comp_of[s1] == comp_of[s2]:
            writhe[comp_of[s1]] += 1 if a > 0 else -1
        where[i], where[i + 1] = s2, s1
    for c, m in enumerate(colors):
        unknot = raw(BraidWord(1), [m])
        twist = raw(BraidWord(2, (1,)), [m]) / unknot
        sign = unknot / MultiRational.from_laurent(quantum_int(m + 1))
        value = value / twist ** writhe[c] / sign
    return value
