"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from linkhom.algebra import LaurentPoly
from linkhom.braid import BraidWord
from linkhom.hecke import HeckeElement

small_ints = st.integers(min_value=-5, max_value=5)


@st.composite
def laurent(draw, max_terms=4, span=6):
    terms = draw(st.dictionaries(st.integers(-span, span), small_ints, max_size=max_terms))
    return LaurentPoly(terms)


@st.composite
def braids(draw, max_strands=3, max_len=4, min_strands=1):
    n = draw(st.integers(min_strands, max_strands))
    if n == 1:
        return BraidWord(1)
    letters = draw(st.lists(st.integers(1, n - 1).flatmap(lambda i: st.sampled_from((i, -i))),
                            max_size=max_len))
    return BraidWord(n, tuple(letters))


@st.composite
def hecke_elements(draw, n=3, max_len=3):
    x = HeckeElement(n)
    for _ in range(draw(st.integers(1, 3))):
        word = draw(st.lists(st.integers(1, n - 1), max_size=max_len))
        term = HeckeElement.one(n)
        for i in word:
            term = term * HeckeElement.generator(n, i)
        x = x + term.scale(draw(laurent(max_terms=2, span=2)))
    return x if x.terms else HeckeElement.one(n)


fractions = st.fractions(min_value=-10, max_value=10, max_denominator=7).map(Fraction)
