import pytest
from conftest import forests, graphs
from hypothesis import given, settings
from oracles import oracle_components

from twoswitch.graphs import (
    Graph,
    GraphFormatError,
    NotAForestError,
    bipartition,
    components,
    degree_sequence,
    format_edge_list,
    is_bipartite,
    is_forest,
    is_graphical,
    is_tree,
    is_unicyclic,
    kappa,
    parse_edge_list,
    path_in_forest,
    to_dot,
)

TRIANGLE = Graph(3, [(1, 2), (1, 3), (2, 3)])


class TestGraphBasics:
    def test_normalizes_and_deduplicates(self):
        g = Graph(3, [(2, 1), (1, 2), (3, 1)])
        assert g.sorted_edges() == [(1, 2), (1, 3)]
        assert (2, 1) in g
        assert (2, 3) not in g

    def test_rejects_bad_edges(self):
        with pytest.raises(GraphFormatError):
            Graph(3, [(1, 1)])
        with pytest.raises(GraphFormatError):
            Graph(3, [(1, 4)])
        with pytest.raises(GraphFormatError):
            Graph(2, [(0, 1)])

    def test_with_edges(self):
        g = Graph(4, [(1, 2), (3, 4)])
        h = g.with_edges(added=[(1, 3)], removed=[(3, 4)])
        assert h.sorted_edges() == [(1, 2), (1, 3)]
        assert g.sorted_edges() == [(1, 2), (3, 4)]  # unchanged

    def test_equality_and_hash(self):
        a = Graph(3, [(1, 2)])
        b = Graph(3, [(2, 1)])
        assert a == b and hash(a) == hash(b)
        assert a != Graph(4, [(1, 2)])

    def test_adjacency_sorted(self):
        g = Graph(4, [(2, 4), (1, 2), (2, 3)])
        assert g.neighbors(2) == (1, 3, 4)
        assert g.degree(2) == 3 and g.degree(1) == 1


class TestDegreeSequence:
    def test_bundled_tree(self, fig1_graphs):
        g0, _, _ = fig1_graphs
        assert degree_sequence(g0) == (3, 2, 2, 2, 1, 1, 1)

    def test_empty(self):
        assert degree_sequence(Graph(3)) == (0, 0, 0)

    def test_eleven_vertex_pair_sorted(self, fig2_graphs):
        for g in fig2_graphs:
            assert tuple(sorted(degree_sequence(g), reverse=True)) == (
                6, 5, 4, 4, 3, 3, 3, 2, 2, 2, 2,
            )

    @given(graphs(max_n=7))
    def test_sum_even(self, g):
        assert sum(degree_sequence(g)) % 2 == 0


class TestGraphical:
    def test_known_cases(self):
        assert is_graphical((3, 2, 2, 2, 1, 1, 1))
        assert is_graphical((0, 0))
        assert not is_graphical((3, 1))
        assert not is_graphical((1,))  # odd sum
        assert is_graphical(())

    def test_matches_enumeration_small(self):
        # a sequence is graphical exactly when something realizes it
        from itertools import product

        from twoswitch.explorer import enumerate_family

        for n in range(5):
            for seq in product(range(n), repeat=n):
                any_graph = next(enumerate_family(seq), None) is not None
                assert is_graphical(seq) == any_graph, seq


class TestComponents:
    def test_bundled_values(self, fig1_graphs):
        g0, g1, _ = fig1_graphs
        assert kappa(g0) == 1
        # g1 keeps edge 1-4, so {1,2,3,4,7} and {5,6} are its components
        assert kappa(g1) == 2
        assert kappa(Graph(4)) == 4

    def test_component_contents(self):
        g = Graph(5, [(1, 2), (4, 5)])
        assert components(g) == [[1, 2], [3], [4, 5]]

    @given(graphs(max_n=8))
    def test_matches_union_find(self, g):
        assert kappa(g) == oracle_components(g)


class TestShapePredicates:
    def test_bundled_flags(self, fig1_graphs):
        g0, g1, _ = fig1_graphs
        assert (is_forest(g0), is_tree(g0), is_unicyclic(g0)) == (True, True, False)
        assert (is_forest(g1), is_tree(g1)) == (False, False)
        assert is_unicyclic(TRIANGLE)
        # triangle plus pendant is still unicyclic; two triangles are not
        assert is_unicyclic(Graph(4, [(1, 2), (2, 3), (1, 3), (1, 4)]))
        two_cycles = Graph(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])
        assert not is_unicyclic(two_cycles)

    @given(forests(max_n=9))
    def test_forest_edge_count(self, f):
        assert is_forest(f)
        assert f.size == f.n - kappa(f)


class TestPathInForest:
    def test_bundled_paths(self, fig1_graphs):
        g0, _, g2 = fig1_graphs
        assert path_in_forest(g0, 2, 6) == [2, 1, 3, 6]
        assert path_in_forest(g2, 5, 7) == [5, 2, 3, 1, 4, 7]
        assert path_in_forest(g0, 4, 4) == [4]

    def test_disconnected_gives_none(self):
        g = Graph(4, [(1, 2), (3, 4)])
        assert path_in_forest(g, 1, 3) is None

    def test_rejects_cycles(self):
        with pytest.raises(NotAForestError):
            path_in_forest(TRIANGLE, 1, 2)

    @given(forests(max_n=9, min_n=2))
    def test_path_is_a_path(self, f):
        p = path_in_forest(f, 1, f.n)
        if p is None:
            return
        assert p[0] == 1 and p[-1] == f.n
        assert len(set(p)) == len(p)
        for a, b in zip(p, p[1:]):
            assert (min(a, b), max(a, b)) in f.edges


class TestBipartition:
    def test_eleven_vertex_pair(self, fig2_graphs):
        g0, g1 = fig2_graphs
        b0, b1 = bipartition(g0), bipartition(g1)
        assert b0 is not None and b1 is not None
        assert b0.side(1) == b0.side(3)
        assert b0.side(3) != b0.side(4)
        assert b1.side(3) == b1.side(4)

    def test_odd_cycle(self):
        assert bipartition(TRIANGLE) is None
        assert not is_bipartite(TRIANGLE)

    @given(graphs(max_n=8))
    def test_parts_are_legal(self, g):
        b = bipartition(g)
        if b is None:
            # some odd closed walk exists; a triangle-free check is enough
            # to exercise both branches without re-deriving odd cycles
            return
        assert set(b.part_a) | set(b.part_b) == set(g.vertices())
        assert not set(b.part_a) & set(b.part_b)
        for u, v in g.edges:
            assert b.side(u) != b.side(v)

    @given(forests(max_n=9))
    def test_forests_always_bipartite(self, f):
        assert is_bipartite(f)


class TestEdgeListFormat:
    def test_round_trip(self, fig1_graphs):
        for g in fig1_graphs:
            assert parse_edge_list(format_edge_list(g)) == g

    @given(graphs(max_n=9))
    def test_round_trip_random(self, g):
        assert parse_edge_list(format_edge_list(g)) == g

    def test_exact_text(self):
        g = Graph(3, [(2, 3), (1, 2)])
        assert format_edge_list(g) == "n 3\n1 2\n2 3\n"

    def test_comments_and_blanks(self):
        g = parse_edge_list("# a remark\nn 3\n\n1 2\n# another\n2 3\n")
        assert g.sorted_edges() == [(1, 2), (2, 3)]

    @pytest.mark.parametrize(
        "text",
        [
            "",  # no header
            "n x\n",  # bad order
            "n 3\n1\n",  # not a pair
            "n 3\n1 1\n",  # loop
            "n 3\n1 4\n",  # out of range
            "n 3\n1 2\n1 2\n",  # duplicate
            "1 2\nn 3\n",  # header not first
        ],
    )
    def test_rejects_malformed(self, text):
        with pytest.raises(GraphFormatError):
            parse_edge_list(text)


def test_dot_output():
    g = Graph(3, [(1, 2)])
    dot = to_dot(g, name="demo")
    assert dot.startswith("graph demo {")
    assert "  1 -- 2;" in dot
    assert "  3;" in dot  # isolated vertices still drawn
    assert dot.rstrip().endswith("}")
