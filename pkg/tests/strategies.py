"""Hypothesis strategies for dominant weights."""
from fractions import Fraction

from hypothesis import strategies as st

from weitzenboeck.weights import DominantWeight


@st.composite
def dominant(draw, n_min=3, n_max=9, max_entry=4, n=None):
    n = draw(st.integers(n_min, n_max)) if n is None else n
    m = n // 2
    half = draw(st.booleans())
    base = [draw(st.integers(0, max_entry)) for _ in range(m)]
    base.sort(reverse=True)
    ents = [Fraction(2 * b + 1, 2) if half else Fraction(b) for b in base]
    if n % 2 == 0 and draw(st.booleans()):
        ents[-1] = -ents[-1]
    return DominantWeight(tuple(ents), n)


def even_dominant(**kw):
    return st.integers(2, 4).flatmap(lambda m: dominant(n=2 * m, **kw))
