"""Hypothesis strategies for small labelled graphs."""

from hypothesis import strategies as st

from diamondkernel.graph import Graph


@st.composite
def graphs(draw, max_n: int = 8, min_n: int = 0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(range(1, n + 1), [p for p, b in zip(pairs, bits) if b])
