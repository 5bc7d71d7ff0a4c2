import pytest
from hypothesis import given

from hypercops import (
    Hypergraph,
    HypergraphError,
    closed_neighborhood,
    dot_delete,
    is_connected,
    is_corner,
    rank_antirank,
    two_section,
    weak_delete,
)
from hypercops.construct import basic

from oracles import closed_nbhd, connected_hypergraphs, pairs_2section

H12345 = Hypergraph.from_edges([(1, 2, 3), (3, 4, 5)])
C4 = Hypergraph([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4), (4, 1)])


class TestHypergraph:
    def test_edges_are_deduplicated_as_sets(self):
        h = Hypergraph([1, 2], [(1, 2), (2, 1)])
        assert len(h.edges) == 1

    @pytest.mark.parametrize("verts, edges", [
        ([1, 1], []),
        ([1, 2], [()]),
        ([1, 2], [(1, 3)]),
    ])
    def test_rejects_invalid(self, verts, edges):
        with pytest.raises(HypergraphError):
            Hypergraph(verts, edges)

    def test_equality_ignores_edge_order(self):
        assert Hypergraph([1, 2, 3], [(1, 2), (2, 3)]) == Hypergraph([1, 2, 3], [(3, 2), (1, 2)])

    def test_vertex_order_matters_for_equality(self):
        assert Hypergraph([1, 2], [(1, 2)]) != Hypergraph([2, 1], [(1, 2)])

    def test_relabel(self):
        h = Hypergraph([1, 2], [(1, 2)]).relabel(str)
        assert h.vertices == ("1", "2") and h.edges == (frozenset({"1", "2"}),)


class TestTwoSection:
    def test_single_edge_is_triangle(self):
        g = two_section(Hypergraph.from_edges([(1, 2, 3)]))
        assert g == Hypergraph([1, 2, 3], [(1, 2), (1, 3), (2, 3)])

    def test_graph_is_fixed_point(self):
        assert two_section(C4) == C4

    def test_two_triangles(self):
        want = Hypergraph([1, 2, 3, 4, 5], [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])
        assert two_section(H12345) == want

    @given(connected_hypergraphs())
    def test_idempotent(self, h):
        g = two_section(h)
        assert two_section(g) == g

    @given(connected_hypergraphs())
    def test_matches_pair_oracle(self, h):
        assert set(two_section(h).edges) == pairs_2section(h)


class TestNeighbourhoods:
    def test_examples(self):
        assert closed_neighborhood(H12345, 3).closed_neighborhood == {1, 2, 3, 4, 5}
        assert closed_neighborhood(C4, 1).closed_neighborhood == {1, 2, 4}
        assert closed_neighborhood(Hypergraph([1], [(1,)]), 1).closed_neighborhood == {1}

    def test_unknown_vertex(self):
        with pytest.raises(HypergraphError):
            closed_neighborhood(C4, 9)

    @given(connected_hypergraphs())
    def test_same_as_in_two_section(self, h):
        g = two_section(h)
        for x in h.vertices:
            assert h.closed(x) == g.closed(x) == closed_nbhd(h, x)


class TestConnectivityAndRank:
    def test_connected(self):
        assert is_connected(H12345)
        assert not is_connected(Hypergraph([1, 2, 3, 4], [(1, 2), (3, 4)]))
        assert is_connected(Hypergraph([1]))

    def test_empty_rejected(self):
        with pytest.raises(HypergraphError):
            is_connected(Hypergraph([]))

    def test_rank(self):
        assert rank_antirank(Hypergraph.from_edges([(1, 2, 3), (3, 4)])) == (3, 2)
        assert rank_antirank(basic("complete", 3)) == (2, 2)
        assert rank_antirank(Hypergraph.from_edges([(1, 2, 3, 4)])) == (4, 4)
        with pytest.raises(HypergraphError):
            rank_antirank(Hypergraph([1]))


class TestDeletion:
    def test_dot_delete_drops_small_edges(self):
        h = Hypergraph.from_edges([(1, 2), (1, 2, 3)])
        assert dot_delete(h, 1) == Hypergraph([2, 3], [(2, 3)])

    def test_dot_delete_merges_duplicates(self):
        h = Hypergraph.from_edges([(1, 2), (1, 2, 3)])
        assert dot_delete(h, 3) == Hypergraph([1, 2], [(1, 2)])

    @given(connected_hypergraphs(min_n=2, max_rank=2))
    def test_dot_delete_on_graph_is_vertex_deletion(self, g):
        x = g.vertices[0]
        want = Hypergraph([v for v in g.vertices if v != x], [e for e in g.edges if x not in e])
        assert dot_delete(g, x) == want

    def test_weak_delete_examples(self):
        h = Hypergraph.from_edges([(1, 2), (1, 3, 4)])
        assert weak_delete(h, 1) == Hypergraph([2, 3, 4], [(2,), (3, 4)])
        tri = Hypergraph.from_edges([(1, 2, 3)])
        assert weak_delete(tri, 1) == dot_delete(tri, 1) == Hypergraph([2, 3], [(2, 3)])
        assert weak_delete(Hypergraph.from_edges([(1, 2)]), 2) == Hypergraph([1], [(1,)])

    @pytest.mark.parametrize("op", [dot_delete, weak_delete])
    def test_unknown_vertex(self, op):
        with pytest.raises(HypergraphError):
            op(C4, 7)

    @given(connected_hypergraphs(min_n=2))
    def test_deletion_commutes_with_two_section(self, h):
        g = two_section(h)
        for x in h.vertices:
            minus = Hypergraph([v for v in h.vertices if v != x], [e for e in g.edges if x not in e])
            assert two_section(dot_delete(h, x)) == minus
            # size-1 remnants contribute no pairs, so they vanish in the 2-section
            assert two_section(weak_delete(h, x)) == minus


class TestCorner:
    def test_examples(self):
        assert is_corner(Hypergraph.from_edges([(1, 2, 3)]), 1) == 2
        assert all(is_corner(C4, x) is None for x in C4.vertices)
        assert is_corner(H12345, 1) == 2

    def test_needs_two_vertices(self):
        with pytest.raises(HypergraphError):
            is_corner(Hypergraph([1]), 1)

    def test_single_edge_ends_cover_each_other(self):
        k2 = Hypergraph.from_edges([(1, 2)])
        assert is_corner(k2, 1) == 2 and is_corner(k2, 2) == 1

    @given(connected_hypergraphs(min_n=2))
    def test_oracle_and_two_section_agree(self, h):
        g = two_section(h)
        for x in h.vertices:
            covers = [u for u in h.vertices if u != x and closed_nbhd(h, x) <= closed_nbhd(h, u)]
            assert is_corner(h, x) == (covers[0] if covers else None)
            assert (is_corner(h, x) is None) == (is_corner(g, x) is None)

    @given(connected_hypergraphs(min_n=2))
    def test_corner_deletion_keeps_connectivity(self, h):
        for x in h.vertices:
            if is_corner(h, x) is not None:
                assert is_connected(dot_delete(h, x))
                assert is_connected(weak_delete(h, x))
