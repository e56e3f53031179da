"""Shared strategies and brute-force oracles for the test suite."""

from __future__ import annotations

import random

import hypothesis.strategies as st
from hypothesis import settings

from hypercode import BitMatrix, Hypergraph

settings.register_profile("default", deadline=None)
settings.load_profile("default")


@st.composite
def bit_matrices(draw, max_rows=8, max_cols=10, min_rows=0, min_cols=0):
    rows = draw(st.integers(min_rows, max_rows))
    cols = draw(st.integers(min_cols, max_cols))
    data = draw(st.lists(st.integers(0, (1 << cols) - 1), min_size=rows, max_size=rows))
    return BitMatrix(rows, cols, tuple(data))


@st.composite
def hypergraphs(draw, max_vertices=8, max_edges=10, min_edges=1):
    n = draw(st.integers(1, max_vertices))
    m = draw(st.integers(min_edges, max_edges))
    edges = tuple(
        tuple(sorted(draw(st.sets(st.integers(0, n - 1), min_size=1, max_size=n))))
        for _ in range(m)
    )
    return Hypergraph(n, edges)


@st.composite
def hypergraphs_with_subset(draw, max_vertices=8, max_edges=10):
    hg = draw(hypergraphs(max_vertices=max_vertices, max_edges=max_edges))
    subset = draw(
        st.sets(st.integers(0, hg.num_vertices - 1), min_size=1, max_size=hg.num_vertices)
    )
    return hg, frozenset(subset)


def span_words(rows) -> set[int]:
    """All XOR combinations of the given packed rows (closure oracle)."""
    words = {0}
    for r in rows:
        words |= {w ^ r for w in words}
    return words


def brute_min_distance(rows) -> int | None:
    """Minimum nonzero weight in the span, or None for the zero span."""
    weights = [w.bit_count() for w in span_words(rows) if w]
    return min(weights) if weights else None


def random_connected_graph(rng: random.Random, n: int, extra_edges: int) -> Hypergraph:
    """Random connected 2-uniform multigraph: a random tree plus extra edges."""
    if n < 2:
        raise ValueError("need at least two vertices for a 2-uniform edge")
    order = list(range(n))
    rng.shuffle(order)
    edges = []
    for i in range(1, n):
        other = order[rng.randrange(i)]
        edges.append(tuple(sorted((order[i], other))))
    for _ in range(extra_edges):
        u, v = rng.sample(range(n), 2)
        edges.append(tuple(sorted((u, v))))
    return Hypergraph(n, tuple(edges))
