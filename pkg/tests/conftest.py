"""Shared strategies and hypothesis settings for the test suite."""

from __future__ import annotations

from hypothesis import HealthCheck, settings, strategies as st

from domcert.graph_core import Graph, from_edge_list

settings.register_profile(
    "suite",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("suite")


def _all_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8) -> Graph:
    """Arbitrary simple graph with a uniform random edge subset."""
    n = draw(st.integers(min_n, max_n))
    pairs = _all_pairs(n)
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [p for p, flag in zip(pairs, keep) if flag])


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    """Connected graph: a random spanning tree plus a random edge subset."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        parent = draw(st.integers(0, v - 1))
        edges.add((parent, v))
    for pair in _all_pairs(n):
        if pair not in edges and draw(st.booleans()):
            edges.add(pair)
    return from_edge_list(n, sorted(edges))
