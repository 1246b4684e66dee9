"""Graph construction, families, and the three composite operations."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from centraljoins.errors import (
    DuplicateEdgeError,
    InvalidParameterError,
    NotRegularError,
    SelfLoopError,
    UnknownFamilyError,
    VertexOutOfRangeError,
)
from centraljoins.graphs import (
    Graph,
    as_regular,
    central_edge_join,
    central_graph,
    central_vertex_join,
    complement,
    complete,
    complete_bipartite,
    component_count,
    cycle,
    family,
    has_bipartite_component,
    make_graph,
    path,
    petersen,
    rook_4x4,
    shrikhande,
)


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return make_graph(n, [])
    edges = draw(st.sets(st.sampled_from(pairs)))
    return make_graph(n, sorted(edges))


class TestMakeGraph:
    def test_single_edge(self):
        g = make_graph(2, [(0, 1)])
        assert (g.n, g.m) == (2, 1)

    def test_k33_from_cross_pairs(self):
        g = make_graph(6, [(u, v) for u in (0, 1, 2) for v in (3, 4, 5)])
        assert (g.n, g.m) == (6, 9)
        assert as_regular(g).r == 3

    def test_normalizes_pair_order(self):
        assert make_graph(3, [(2, 0)]) == make_graph(3, [(0, 2)])

    def test_self_loop_rejected(self):
        with pytest.raises(SelfLoopError):
            make_graph(3, [(0, 0)])

    def test_duplicate_rejected_after_normalization(self):
        with pytest.raises(DuplicateEdgeError):
            make_graph(3, [(0, 1), (1, 0)])

    def test_out_of_range_rejected(self):
        with pytest.raises(VertexOutOfRangeError):
            make_graph(2, [(0, 2)])
        with pytest.raises(VertexOutOfRangeError):
            make_graph(2, [(-1, 0)])


class TestFamilies:
    def test_complete_bipartite_33(self):
        g = family("complete_bipartite(3,3)")
        assert (g.n, g.m) == (6, 9)
        assert as_regular(g).r == 3

    def test_complete_2(self):
        assert as_regular(family("complete(2)")).r == 1

    def test_shrikhande_by_direct_count(self):
        g = shrikhande()
        assert (g.n, g.m) == (16, 48)
        assert set(g.degrees().tolist()) == {6}

    def test_rook_by_direct_count(self):
        g = rook_4x4()
        assert (g.n, g.m) == (16, 48)
        assert set(g.degrees().tolist()) == {6}
        # rows and columns of the board are 4-cliques
        assert {(0, 1), (0, 2), (0, 3), (0, 4), (0, 8), (0, 12)} <= g.edge_set()

    def test_petersen_by_direct_count(self):
        g = petersen()
        assert (g.n, g.m) == (10, 15)
        assert set(g.degrees().tolist()) == {3}

    def test_cycle_and_path(self):
        assert cycle(5).m == 5
        assert path(4).m == 3

    def test_invalid_parameters(self):
        with pytest.raises(InvalidParameterError):
            family("cycle(2)")
        with pytest.raises(InvalidParameterError):
            family("complete_bipartite(3)")
        with pytest.raises(InvalidParameterError):
            family("petersen(5)")

    def test_unknown_family(self):
        with pytest.raises(UnknownFamilyError):
            family("moebius(7)")


class TestComplement:
    def test_k2(self):
        assert complement(complete(2)).m == 0

    def test_c5_self_complementary(self):
        g = complement(cycle(5))
        assert set(g.degrees().tolist()) == {2}
        assert component_count(g) == 1  # a connected 2-regular graph is a cycle

    def test_k33_complement_is_two_triangles(self):
        # independent oracle: enumerate the non-edges of K_{3,3} by hand
        expected = {(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)}
        g = complement(complete_bipartite(3, 3))
        assert g.edge_set() == frozenset(expected)
        assert component_count(g) == 2

    @given(graphs())
    def test_involution(self, g):
        assert complement(complement(g)) == g


class TestCentralGraph:
    def test_k2_gives_path3(self):
        g, labeling = central_graph(complete(2))
        assert g == make_graph(3, [(0, 2), (1, 2)])
        assert labeling.counts() == (2, 1, 0)

    def test_k33_counts(self):
        g, _ = central_graph(complete_bipartite(3, 3))
        assert (g.n, g.m) == (15, 24)

    def test_empty_graph_on_three_vertices_gives_k3(self):
        g, _ = central_graph(make_graph(3, []))
        assert g == complete(3)

    def test_degenerate_sizes(self):
        g0, _ = central_graph(make_graph(0, []))
        assert (g0.n, g0.m) == (0, 0)
        g1, _ = central_graph(make_graph(1, []))
        assert (g1.n, g1.m) == (1, 0)

    def test_adjacency_structure(self):
        base = cycle(4)
        g, labeling = central_graph(base)
        edges = g.edge_set()
        # original u is adjacent to the midpoint of each incident edge
        for k, (u, v) in enumerate(base.edges):
            assert (u, base.n + k) in edges and (v, base.n + k) in edges
        # originals adjacent exactly when non-adjacent in the base
        for u in range(base.n):
            for v in range(u + 1, base.n):
                assert ((u, v) in edges) == ((u, v) not in base.edge_set())
        # midpoints pairwise non-adjacent
        subdivision = [i for i, role in enumerate(labeling.roles) if role.kind == "subdivision"]
        for i in subdivision:
            for j in subdivision:
                if i < j:
                    assert (i, j) not in edges

    @given(graphs())
    @settings(max_examples=60)
    def test_counts_formula(self, g):
        composite, labeling = central_graph(g)
        assert composite.n == g.n + g.m
        assert composite.m == g.m + g.n * (g.n - 1) // 2
        assert labeling.counts() == (g.n, g.m, 0)


class TestJoins:
    def test_cvj_counts(self):
        g, labeling = central_vertex_join(complete_bipartite(3, 3), complete(2))
        assert (g.n, g.m) == (17, 37)
        assert labeling.counts() == (6, 9, 2)

    def test_cej_counts(self):
        g, labeling = central_edge_join(complete_bipartite(3, 3), complete(2))
        assert (g.n, g.m) == (17, 43)
        assert labeling.counts() == (6, 9, 2)

    def test_cvj_k2_with_single_vertex(self):
        g, _ = central_vertex_join(complete(2), make_graph(1, []))
        assert g == make_graph(4, [(0, 2), (1, 2), (0, 3), (1, 3)])

    def test_cej_k2_with_single_vertex_is_star(self):
        g, _ = central_edge_join(complete(2), make_graph(1, []))
        assert g == make_graph(4, [(0, 2), (1, 2), (2, 3)])
        assert sorted(g.degrees().tolist()) == [1, 1, 1, 3]

    def test_cvj_degree_blocks(self):
        g, labeling = central_vertex_join(complete_bipartite(3, 3), complete(2))
        deg = g.degrees()
        expected = {"original": 7, "subdivision": 2, "partner": 7}
        for i, role in enumerate(labeling.roles):
            assert deg[i] == expected[role.kind], (i, role)

    def test_cej_degree_blocks(self):
        g, labeling = central_edge_join(complete_bipartite(3, 3), complete(2))
        deg = g.degrees()
        expected = {"original": 5, "subdivision": 4, "partner": 10}
        for i, role in enumerate(labeling.roles):
            assert deg[i] == expected[role.kind], (i, role)

    def test_labeling_block_order(self):
        _, labeling = central_edge_join(cycle(4), complete(3))
        kinds = [role.kind for role in labeling.roles]
        assert kinds == ["original"] * 4 + ["subdivision"] * 4 + ["partner"] * 3

    @given(graphs(max_n=6), graphs(max_n=5))
    @settings(max_examples=40)
    def test_join_counts_and_prefix(self, g1, g2):
        cg, _ = central_graph(g1)
        for op, extra in ((central_vertex_join, g1.n * g2.n), (central_edge_join, g1.m * g2.n)):
            composite, labeling = op(g1, g2)
            assert composite.n == g1.m + g1.n + g2.n
            assert composite.m == g1.m + g2.m + extra + g1.n * (g1.n - 1) // 2
            assert labeling.counts() == (g1.n, g1.m, g2.n)
            # restriction to the first n1 + m1 vertices is the central graph
            prefix = frozenset(
                e for e in composite.edges if e[0] < cg.n and e[1] < cg.n
            )
            assert prefix == cg.edge_set()

    def test_deterministic(self):
        a = central_vertex_join(petersen(), cycle(4))
        b = central_vertex_join(petersen(), cycle(4))
        assert a == b


class TestAsRegular:
    def test_k33(self):
        assert as_regular(complete_bipartite(3, 3)).r == 3

    def test_path_not_regular_carries_degrees(self):
        with pytest.raises(NotRegularError) as excinfo:
            as_regular(path(3))
        assert excinfo.value.degree_multiset == (1, 1, 2)

    def test_petersen(self):
        assert as_regular(petersen()).r == 3

    def test_edgeless_is_zero_regular(self):
        assert as_regular(make_graph(3, [])).r == 0

    def test_wrapper_validates_directly(self):
        from centraljoins.graphs import RegularGraph

        with pytest.raises(NotRegularError):
            RegularGraph(path(3), 2)


class TestStructuralOracles:
    def test_component_count(self):
        assert component_count(path(4)) == 1
        assert component_count(make_graph(3, [])) == 3
        two_triangles = complement(complete_bipartite(3, 3))
        assert component_count(two_triangles) == 2

    def test_bipartite_detection(self):
        assert has_bipartite_component(complete_bipartite(3, 3))
        assert not has_bipartite_component(complete(3))
        assert not has_bipartite_component(complement(complete_bipartite(3, 3)))
        assert has_bipartite_component(make_graph(5, [(0, 1), (1, 2), (0, 2), (3, 4)]))
        assert has_bipartite_component(cycle(6))
        assert not has_bipartite_component(cycle(5))


def test_graph_rejects_non_canonical_edges():
    with pytest.raises(DuplicateEdgeError):
        Graph(3, ((0, 1), (0, 1)))
    with pytest.raises(SelfLoopError):
        Graph(3, ((1, 1),))


def test_adjacency_matrix_matches_degree_sum():
    g = petersen()
    a = g.adjacency()
    assert np.array_equal(a, a.T)
    assert np.array_equal(a.sum(axis=1), g.degrees().astype(float))
