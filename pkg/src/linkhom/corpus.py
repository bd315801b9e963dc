"""A small pinned set of braid words used for corpus-wide consistency checks.

Every word has at most six crossings and at most three strands.
"""

from __future__ import annotations

from .braid import BraidWord, parse_braid

__all__ = ["CORPUS", "corpus_braids"]

CORPUS: tuple[tuple[str, str], ...] = (
    ("1:", "unknot"),
    ("2: 1 -1", "unknot, cancelling pair"),
    ("3: 1 2", "unknot, two stabilizations"),
    ("2: 1 1", "Hopf link"),
    ("2: -1 -1", "Hopf link, mirror"),
    ("2: 1 1 1", "trefoil"),
    ("2: -1 -1 -1", "trefoil, mirror"),
    ("2: 1 1 1 1", "(2,4) torus link"),
    ("3: 1 -2 1 -2", "figure-eight knot"),
    ("2: 1 1 1 1 1", "cinquefoil"),
    ("3: 1 1 1 2 -1 2", "six-letter knot word"),
    ("3: 1 -2 1 -2 1 -2", "Borromean rings"),
)


def corpus_braids() -> list[BraidWord]:
    return [parse_braid(text) for text, _ in CORPUS]
