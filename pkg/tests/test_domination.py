"""Exact domination number and the minimal/maximal set reducers."""

from __future__ import annotations

import pytest
from hypothesis import given

from conftest import connected_graphs, graphs
from domcert.domination import (
    gamma_brute_force,
    gamma_exact,
    independence_number,
    is_dominating,
    is_independent,
    maximal_independent_subset,
    minimal_dominating_subset,
    private_neighbors,
)
from domcert.errors import PreconditionError
from domcert.graph_core import (
    from_edge_list,
    gen_complete,
    gen_empty,
    gen_k_star,
    gen_path,
    gen_s_star,
)


class TestGammaExact:
    def test_complete(self):
        assert gamma_exact(gen_complete(6)).gamma == 1

    def test_path_seven(self):
        assert gamma_exact(gen_path(7)).gamma == 3

    def test_pendant_clique_four(self):
        assert gamma_exact(gen_k_star(4)).gamma == 4

    def test_four_cycle(self):
        c4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert gamma_exact(c4).gamma == 2

    def test_path_formula(self):
        for n in range(1, 16):
            assert gamma_exact(gen_path(n)).gamma == -(-n // 3)

    def test_empty_graph_rejected(self):
        with pytest.raises(PreconditionError):
            gamma_exact(gen_empty(0))
        with pytest.raises(PreconditionError):
            gamma_brute_force(gen_empty(0))

    def test_isolated_vertices(self):
        assert gamma_exact(gen_empty(4)).gamma == 4

    @given(graphs(min_n=1, max_n=7))
    def test_witness_is_minimum(self, g):
        result = gamma_exact(g)
        assert is_dominating(g, result.witness)
        assert len(result.witness) == result.gamma
        assert result.gamma == gamma_brute_force(g).gamma

    @given(connected_graphs(max_n=8))
    def test_witness_dominates_connected(self, g):
        result = gamma_exact(g)
        assert is_dominating(g, result.witness)


class TestIsDominating:
    def test_path_center(self):
        assert is_dominating(gen_path(3), {1})
        assert not is_dominating(gen_path(3), {0})

    def test_spider_middles(self):
        assert is_dominating(gen_s_star(3), {1, 2, 3})

    def test_empty_set_on_empty_graph(self):
        assert is_dominating(gen_empty(0), set())


class TestMinimalDominatingSubset:
    def test_path_drops_useless_end(self):
        p3 = gen_path(3)
        assert minimal_dominating_subset(p3, {0, 1}, {2}) == {1}

    def test_complete_keeps_lowest(self):
        k5 = gen_complete(5)
        assert minimal_dominating_subset(k5, range(5), range(5)) == {0}

    def test_spider_middles_all_needed(self):
        s3 = gen_s_star(3)
        assert minimal_dominating_subset(s3, {1, 2, 3}, {4, 5, 6}) == {1, 2, 3}

    def test_precondition_reported(self):
        with pytest.raises(PreconditionError, match="does not dominate"):
            minimal_dominating_subset(gen_path(4), {0}, {3})

    def test_empty_targets_empty_result(self):
        assert minimal_dominating_subset(gen_path(4), {0, 1}, set()) == frozenset()

    @given(connected_graphs(max_n=8))
    def test_inclusion_minimal(self, g):
        targets = set(range(g.n))
        reduced = minimal_dominating_subset(g, range(g.n), targets)
        assert is_dominating(g, reduced)
        for v in reduced:
            trial = set(reduced) - {v}
            covered = set()
            for u in trial:
                covered.add(u)
                covered |= g.adj[u]
            assert not targets <= covered


class TestMaximalIndependentSubset:
    def test_complete_singleton(self):
        assert maximal_independent_subset(gen_complete(5), range(5)) == {0}

    def test_edgeless_everything(self):
        assert maximal_independent_subset(gen_empty(4), range(4)) == {0, 1, 2, 3}

    def test_path_interior(self):
        assert maximal_independent_subset(gen_path(5), {1, 2, 3}) == {1, 3}

    @given(graphs(min_n=1, max_n=8))
    def test_independent_and_maximal(self, g):
        pool = set(range(g.n))
        chosen = maximal_independent_subset(g, pool)
        assert is_independent(g, chosen)
        for v in pool - chosen:
            assert any(g.has_edge(v, u) for u in chosen)


class TestPrivateNeighbors:
    def test_spider_tips(self):
        s3 = gen_s_star(3)
        assert private_neighbors(s3, frozenset({1, 2, 3}), {4, 5, 6}) == {1: 4, 2: 5, 3: 6}

    def test_lowest_id_tie_break(self):
        p3 = gen_path(3)
        assert private_neighbors(p3, frozenset({1}), {0, 2}) == {1: 0}

    def test_pendant_private(self):
        k3 = gen_k_star(3)
        assert private_neighbors(k3, frozenset({0}), {3}) == {0: 3}

    def test_missing_private_reported(self):
        # Both candidates cover the single target, so neither has it privately.
        p3 = gen_path(3)
        with pytest.raises(PreconditionError, match="no private"):
            private_neighbors(p3, frozenset({0, 2}), {1})

    @given(connected_graphs(min_n=2, max_n=8))
    def test_privates_are_private(self, g):
        targets = set(range(g.n))
        reduced = minimal_dominating_subset(g, range(g.n), targets)
        mapping = private_neighbors(g, reduced, targets)
        for u, x in mapping.items():
            closed = set(g.adj[x]) | {x}
            assert closed & reduced == {u}


class TestIndependenceNumber:
    def test_complete(self):
        assert independence_number(gen_complete(5)) == 1

    def test_edgeless(self):
        assert independence_number(gen_empty(4)) == 4

    def test_path(self):
        assert independence_number(gen_path(5)) == 3

    def test_small_forces_small_gamma(self):
        # Independence number below k bounds the domination number by k-1.
        g = gen_complete(6)
        assert independence_number(g) < 2
        assert gamma_exact(g).gamma <= 1
