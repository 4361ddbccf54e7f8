"""
Hypothesis strategies for small graphs and vertex sets
"""
from hypothesis import strategies as st

from zforce.constructions import pair_list
from zforce.graph import VertexSet, build_graph


@st.composite
def graphs(draw, min_order=1, max_order=8):
    n = draw(st.integers(min_order, max_order))
    pairs = pair_list(n)
    present = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [p for p, keep in zip(pairs, present) if keep])


@st.composite
def graphs_with_set(draw, min_order=1, max_order=8):
    g = draw(graphs(min_order, max_order))
    mask = draw(st.integers(0, g.full_mask))
    return g, VertexSet.from_mask(mask)
