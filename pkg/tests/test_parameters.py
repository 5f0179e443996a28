import itertools

import pytest
from conftest import forests, graphs
from hypothesis import given, settings
from oracles import ORACLES, oracle_rank

from twoswitch import parameters
from twoswitch.graphs import Graph, degree_sequence, is_forest
from twoswitch.parameters import (
    STABLE_KINDS,
    IsolatedVertexError,
    adjacency_rank,
    chromatic_number,
    clique_number,
    compute,
    domination_number,
    edge_cover_number,
    forest_rank_nullity,
    independence_number,
    matching_number,
    path_cover_number,
    vertex_cover_number,
)

K4 = Graph(4, [(u, v) for u in range(1, 4) for v in range(u + 1, 5)])
PM4 = Graph(4, [(1, 2), (3, 4)])
PM6 = Graph(6, [(1, 2), (3, 4), (5, 6)])
STAR5 = Graph(5, [(1, v) for v in range(2, 6)])
P5 = Graph(5, [(v, v + 1) for v in range(1, 5)])


class TestBundledValues:
    """Expected numbers below were frozen from the subset-scan oracles."""

    def test_spider_tree(self, fig1_graphs):
        g0, _, _ = fig1_graphs
        assert matching_number(g0) == 3
        assert independence_number(g0) == 4
        assert vertex_cover_number(g0) == 3
        assert domination_number(g0) == 3
        assert path_cover_number(g0) == 2
        assert edge_cover_number(g0) == 4  # 7 - 3
        assert chromatic_number(g0) == 2
        assert clique_number(g0) == 2
        assert forest_rank_nullity(g0) == (6, 1)

    def test_unicyclic_intermediate(self, fig1_graphs):
        _, g1, _ = fig1_graphs
        assert chromatic_number(g1) == 3
        assert clique_number(g1) == 3
        assert compute("components", g1) == 2

    def test_small_named_graphs(self):
        assert independence_number(K4) == 1
        assert vertex_cover_number(K4) == 3
        assert domination_number(STAR5) == 1
        assert path_cover_number(P5) == 1
        assert edge_cover_number(PM4) == 2
        assert forest_rank_nullity(PM6) == (6, 0)

    def test_empty_graphs(self):
        assert matching_number(Graph(0)) == 0
        assert degree_sequence(Graph(5)) == (0,) * 5
        assert independence_number(Graph(5)) == 5
        assert vertex_cover_number(Graph(5)) == 0
        assert domination_number(Graph(3)) == 3
        assert path_cover_number(Graph(4)) == 4
        assert chromatic_number(Graph(2)) == 1
        assert clique_number(Graph(2)) == 1
        assert chromatic_number(Graph(0)) == 0
        assert forest_rank_nullity(Graph(3)) == (0, 3)

    def test_isolated_vertex_guard(self):
        with pytest.raises(IsolatedVertexError):
            edge_cover_number(Graph(3, [(1, 2)]))
        assert edge_cover_number(Graph(0)) == 0

    def test_compute_dispatch(self, fig1_graphs):
        g0, g1, _ = fig1_graphs
        assert compute("components", g1) == 2
        assert compute("matching", Graph(0)) == 0
        assert compute("domination", g0) == 3
        with pytest.raises(Exception):
            compute("girth", g0)


def all_graphs_upto(max_n):
    for n in range(max_n + 1):
        slots = [(u, v) for u in range(1, n) for v in range(u + 1, n + 1)]
        for r in range(len(slots) + 1):
            for combo in itertools.combinations(slots, r):
                yield Graph(n, combo)


class TestAgainstOracles:
    @pytest.mark.parametrize("kind", STABLE_KINDS)
    def test_exhaustive_small(self, kind):
        for g in all_graphs_upto(4):
            if kind == "edge_cover" and any(d == 0 for d in degree_sequence(g)):
                continue
            assert compute(kind, g) == ORACLES[kind](g), g.sorted_edges()

    @pytest.mark.parametrize("kind", STABLE_KINDS)
    @given(g=graphs(max_n=6))
    @settings(max_examples=40, deadline=None)
    def test_sampled_medium(self, kind, g):
        if kind == "edge_cover" and any(d == 0 for d in degree_sequence(g)):
            return
        assert compute(kind, g) == ORACLES[kind](g)

    @given(graphs(max_n=7, min_n=1))
    @settings(max_examples=60, deadline=None)
    def test_complement_identities(self, g):
        assert independence_number(g) + vertex_cover_number(g) == g.n
        if all(d > 0 for d in degree_sequence(g)):
            assert edge_cover_number(g) + matching_number(g) == g.n


class TestForestRoutines:
    """The rooted dynamic programs must agree with the general branchers."""

    FOREST_PAIRS = [
        ("matching", parameters.forest_matching_number, matching_number),
        ("independence", parameters.forest_independence_number, independence_number),
        ("domination", parameters.forest_domination_number, domination_number),
        ("path_cover", parameters.forest_path_cover_number, path_cover_number),
    ]

    def test_exhaustive_forests(self):
        from twoswitch.explorer import enumerate_forests

        for n in range(7):
            for edges in enumerate_forests(n):
                f = Graph(n, edges)
                for _, fast, general in self.FOREST_PAIRS:
                    assert fast(f) == general(f), (n, edges)

    @given(forests(max_n=12))
    @settings(max_examples=80, deadline=None)
    def test_random_larger_forests(self, f):
        for _, fast, general in self.FOREST_PAIRS:
            assert fast(f) == general(f)

    @given(forests(max_n=12))
    def test_compute_routes_to_same_value(self, f):
        for kind, fast, _ in self.FOREST_PAIRS:
            assert compute(kind, f) == fast(f)


class TestRank:
    @given(graphs(max_n=8))
    @settings(max_examples=120, deadline=None)
    def test_matches_floating_rank(self, g):
        assert adjacency_rank(g) == oracle_rank(g)

    @given(forests(max_n=10))
    @settings(max_examples=80, deadline=None)
    def test_forest_rank_is_twice_matching(self, f):
        rank, nullity = forest_rank_nullity(f)
        assert rank == 2 * matching_number(f)
        assert rank + nullity == f.n
        assert adjacency_rank(f) == rank

    def test_triangle_rank(self):
        # odd cycles are full rank, showing rank != 2*matching in general
        tri = Graph(3, [(1, 2), (1, 3), (2, 3)])
        assert adjacency_rank(tri) == 3
        assert matching_number(tri) == 1
