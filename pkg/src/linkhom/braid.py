"""Braid words, their closures and the elementary moves between them."""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "BraidParseError",
    "BraidWord",
    "ClosureDiagram",
    "parse_braid",
    "exponent_sum",
    "mirror",
    "enumerate_moves",
    "smoothing_circles",
]


class BraidParseError(ValueError):
    """Raised for text that is not a valid ``"n: i1 i2 ..."`` braid word."""


@dataclass(frozen=True)
class BraidWord:
    """A braid on ``strands`` strands; letter ``+i`` is the generator, ``-i`` its inverse."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise BraidParseError("a braid needs at least one strand")
        for a in self.letters:
            if a == 0 or abs(a) >= self.strands:
                raise BraidParseError(f"generator {a} out of range for {self.strands} strands")
        object.__setattr__(self, "letters", tuple(self.letters))

    def __str__(self):
        body = " ".join(str(a) for a in self.letters)
        return f"{self.strands}:" + (f" {body}" if body else "")

    def __len__(self):
        return len(self.letters)

    @property
    def n_pos(self) -> int:
        return sum(1 for a in self.letters if a > 0)

    @property
    def n_neg(self) -> int:
        return sum(1 for a in self.letters if a < 0)

    def permutation(self) -> list[int]:
        """Where each bottom position ends up at the top (0-based)."""
        perm = list(range(self.strands))
        for a in self.letters:
            i = abs(a) - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        return perm

    def components(self) -> list[list[int]]:
        """Closure components as cycles of strand positions."""
        perm = self.permutation()
        seen, out = set(), []
        for start in range(self.strands):
            if start in seen:
                continue
            cyc, p = [], start
            while p not in seen:
                seen.add(p)
                cyc.append(p)
                p = perm[p]
            out.append(cyc)
        return out

    def component_count(self) -> int:
        return len(self.components())

    def with_letters(self, letters, strands: int | None = None) -> BraidWord:
        return BraidWord(self.strands if strands is None else strands, tuple(letters))


def parse_braid(text: str) -> BraidWord:
    """Parse ``"n: i1 i2 ..."``."""
    head, sep, body = text.partition(":")
    if not sep:
        raise BraidParseError(f"missing ':' in braid {text!r}")
    try:
        n = int(head.strip())
        letters = tuple(int(tok) for tok in body.split())
    except ValueError as exc:
        raise BraidParseError(f"malformed integer in braid {text!r}") from exc
    if 0 in letters:
        raise BraidParseError("braid letters must be nonzero")
    return BraidWord(n, letters)


def exponent_sum(b: BraidWord) -> int:
    return sum(1 if a > 0 else -1 for a in b.letters)


def mirror(b: BraidWord) -> BraidWord:
    """Flip every crossing."""
    return b.with_letters(-a for a in b.letters)


def enumerate_moves(b: BraidWord) -> list[BraidWord]:
    """All words one braid-group or Markov move away from ``b`` (deduplicated, ordered)."""
    w = list(b.letters)
    n = b.strands
    out: list[BraidWord] = []

    def add(letters, strands=n):
        cand = BraidWord(strands, tuple(letters))
        if cand != b and cand not in out:
            out.append(cand)

    for p in range(len(w) - 1):
        x, y = w[p], w[p + 1]
        if abs(abs(x) - abs(y)) >= 2:
            add(w[:p] + [y, x] + w[p + 2:])
        if x == -y:
            add(w[:p] + w[p + 2:])
    for p in range(len(w) - 2):
        x, y, z = w[p:p + 3]
        if x == z and abs(abs(x) - abs(y)) == 1 and (x > 0) == (y > 0):
            add(w[:p] + [y, x, y] + w[p + 3:])
    if len(w) > 1:
        add(w[1:] + w[:1])
        add(w[-1:] + w[:-1])
        if w[0] == -w[-1]:
            add(w[1:-1])
    add(w + [n], n + 1)
    add(w + [-n], n + 1)
    # destabilization: the top generator appears once, as the last letter
    if n > 1 and w and abs(w[-1]) == n - 1 and sum(1 for a in w if abs(a) == n - 1) == 1:
        add(w[:-1], n - 1)
    return out


class ClosureDiagram:
    """The closed braid diagram, with one crossing per letter.

    Endpoints are ``(position, level)``; level ``c`` (= number of letters) is
    identified with level 0 by the closure.
    """

    def __init__(self, b: BraidWord):
        self.braid = b
        self.crossings = [(abs(a) - 1, 1 if a > 0 else -1) for a in b.letters]

    @property
    def n_pos(self) -> int:
        return self.braid.n_pos

    @property
    def n_neg(self) -> int:
        return self.braid.n_neg

    def __len__(self):
        return len(self.crossings)

    def _node(self, pos: int, level: int) -> int:
        c = len(self.crossings)
        return pos * max(c, 1) + (level % c if c else 0)

    def circle_labels(self, state) -> tuple[int, list[tuple[int, int]]]:
        """Smooth every crossing per ``state``.

        Returns the circle count and, per crossing, the circle ids of its four
        endpoints (lower-left, lower-right, upper-left, upper-right).
        """
        count, label = self.node_circles(state)
        local = []
        for t, (i, _) in enumerate(self.crossings):
            local.append((label[self._node(i, t)], label[self._node(i + 1, t)],
                          label[self._node(i, t + 1)], label[self._node(i + 1, t + 1)]))
        return count, local

    def node_circles(self, state) -> tuple[int, list[int]]:
        """Circle count and the circle id (0..count-1) of every endpoint node."""
        n = self.braid.strands
        c = len(self.crossings)
        if len(state) != c:
            raise ValueError("state length must equal the number of crossings")
        if c == 0:
            return n, list(range(n))
        parent = list(range(n * c))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry

        for t, ((i, _), bit) in enumerate(zip(self.crossings, state)):
            for p in range(n):
                if p not in (i, i + 1):
                    union(self._node(p, t), self._node(p, t + 1))
            if bit:
                union(self._node(i, t), self._node(i + 1, t))
                union(self._node(i, t + 1), self._node(i + 1, t + 1))
            else:
                union(self._node(i, t), self._node(i, t + 1))
                union(self._node(i + 1, t), self._node(i + 1, t + 1))
        index: dict[int, int] = {}
        label = []
        for x in range(n * c):
            r = find(x)
            if r not in index:
                index[r] = len(index)
            label.append(index[r])
        return len(index), label


def smoothing_circles(d: ClosureDiagram | BraidWord, state) -> int:
    """Number of circles after smoothing; bit 0 = identity, bit 1 = cup-cap."""
    if isinstance(d, BraidWord):
        d = ClosureDiagram(d)
    return d.circle_labels(tuple(state))[0]
