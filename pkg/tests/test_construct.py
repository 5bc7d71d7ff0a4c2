from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercops import Hypergraph, cop_number, is_connected, two_section
from hypercops.construct import (
    ConstructionError,
    PartitionSpec,
    PrismSpec,
    basic,
    cartesian_product,
    complete_multipartite,
    host_path,
    hypertree_from_host,
    l_multipartite,
    prism,
    product_label,
    random_connected_hypergraph,
    random_hypertree,
    random_tree,
    render_label,
)
from hypercops.suites import host_path_violations

from oracles import connected_hypergraphs


def as_nx(h):
    g = nx.Graph()
    g.add_nodes_from(h.vertices)
    g.add_edges_from(tuple(e) for e in two_section(h).edges)
    return g


class TestBasic:
    def test_sizes(self):
        c4 = basic("cycle", 4)
        assert len(c4.vertices) == 4 and len(c4.edges) == 4
        q3 = basic("hypercube", 3)
        assert len(q3.vertices) == 8 and len(q3.edges) == 12
        p1 = basic("path", 1)
        assert len(p1.vertices) == 1 and not p1.edges
        assert len(basic("complete", 5).edges) == 10
        assert len(basic("hypercube", 0).vertices) == 1

    @pytest.mark.parametrize("kind, n", [("cycle", 2), ("path", 0), ("hypercube", -1), ("complete", 0)])
    def test_out_of_range(self, kind, n):
        with pytest.raises(ConstructionError):
            basic(kind, n)

    def test_hypercube_is_cube_graph(self):
        assert nx.is_isomorphic(as_nx(basic("hypercube", 3)), nx.hypercube_graph(3))


def transversal_oracle(parts, r):
    cls = [i for i, n in enumerate(parts) for _ in range(n)]
    return sum(1 for e in combinations(range(len(cls)), r) if len({cls[v] for v in e}) == r)


def meets_oracle(parts, r, s):
    cls = [i for i, n in enumerate(parts) for _ in range(n)]
    return sum(1 for e in combinations(range(len(cls)), r) if len({cls[v] for v in e}) >= s)


class TestMultipartite:
    def test_examples(self):
        k22 = complete_multipartite(PartitionSpec(2, (2, 2)))
        assert len(k22.edges) == 4 and nx.is_isomorphic(as_nx(k22), nx.cycle_graph(4))
        assert len(complete_multipartite(PartitionSpec(3, (1, 2, 2))).edges) == 4
        assert len(complete_multipartite(PartitionSpec(3, (2, 2, 2))).edges) == 8

    @given(st.lists(st.integers(1, 3), min_size=2, max_size=4).map(sorted), st.integers(2, 4))
    def test_edge_count_matches_enumeration(self, parts, r):
        if r > len(parts) or sum(parts) > 10:
            return
        h = complete_multipartite(PartitionSpec(r, tuple(parts)))
        assert len(h.edges) == transversal_oracle(parts, r)
        assert all(len(e) == r for e in h.edges)

    def test_l_family_single_edge(self):
        h = l_multipartite(PartitionSpec(4, (1, 1, 2), s=2))
        assert h.edges == (frozenset({0, 1, 2, 3}),)

    def test_l_family_requires_more_classes_than_r(self):
        # t = r = 3 sits outside the family's parameter range
        with pytest.raises(ConstructionError):
            l_multipartite(PartitionSpec(3, (1, 1, 2), s=2))
        assert meets_oracle((1, 1, 2), 3, 2) == 4

    def test_l_family_needs_enough_vertices(self):
        with pytest.raises(ConstructionError):
            l_multipartite(PartitionSpec(4, (1, 1, 1), s=2))

    @given(st.lists(st.integers(1, 3), min_size=2, max_size=3).map(sorted), st.integers(3, 5), st.integers(2, 3))
    def test_l_edge_count_matches_enumeration(self, parts, r, s):
        t = len(parts)
        if not 2 <= s <= t < r or sum(parts) < r:
            return
        h = l_multipartite(PartitionSpec(r, tuple(parts), s))
        assert len(h.edges) == meets_oracle(parts, r, s)

    @pytest.mark.parametrize("spec", [
        PartitionSpec(2, (2,)),
        PartitionSpec(2, (2, 1)),
        PartitionSpec(4, (1, 2, 2)),
        PartitionSpec(2, (1, 2), s=2),
    ])
    def test_invalid_k_specs(self, spec):
        with pytest.raises(ConstructionError):
            complete_multipartite(spec)


class TestProduct:
    def test_k2_square_is_c4(self):
        k2 = basic("complete", 2)
        g = cartesian_product([k2, k2])
        assert nx.is_isomorphic(as_nx(g), nx.cycle_graph(4))
        assert len(g.edges) == 4

    def test_two_triangles(self):
        g = cartesian_product([Hypergraph.from_edges([("a", "b", "c")]), Hypergraph.from_edges([("x", "y", "z")])])
        assert len(g.vertices) == 9
        assert len(g.edges) == 6 and all(len(e) == 3 for e in g.edges)

    def test_needs_two_factors(self):
        with pytest.raises(ConstructionError):
            cartesian_product([basic("path", 2)])
        with pytest.raises(ConstructionError):
            cartesian_product([basic("path", 2), Hypergraph([])])

    def test_labels_flatten(self):
        assert product_label(((1, 2), 3)) == (1, 2, 3)
        assert render_label((1, "a")) == "(1,a)"

    @settings(max_examples=30)
    @given(connected_hypergraphs(max_n=3, max_rank=3), connected_hypergraphs(max_n=3, max_rank=3),
           connected_hypergraphs(max_n=3, max_rank=3))
    def test_associative_with_flat_labels(self, a, b, c):
        a = a.relabel(lambda v: f"a{v}")
        b = b.relabel(lambda v: f"b{v}")
        c = c.relabel(lambda v: f"c{v}")
        flat = cartesian_product([a, b, c])
        assert cartesian_product([cartesian_product([a, b]), c]) == flat
        assert cartesian_product([a, cartesian_product([b, c])]) == flat

    @settings(max_examples=30)
    @given(connected_hypergraphs(max_n=5, max_rank=3), connected_hypergraphs(max_n=5, max_rank=3))
    def test_two_section_commutes(self, g, h):
        assert two_section(cartesian_product([g, h])) == cartesian_product([two_section(g), two_section(h)])

    @given(connected_hypergraphs(max_n=4), connected_hypergraphs(max_n=4))
    def test_edge_count(self, g, h):
        gh = cartesian_product([g, h])
        assert len(gh.vertices) == len(g.vertices) * len(h.vertices)
        assert len(gh.edges) == len(g.edges) * len(h.vertices) + len(h.edges) * len(g.vertices)


def prism_oracle(base, n, r):
    """Edge set straight from the definition, on (vertex, copy) pairs."""
    edges = set()
    for i in range(1, n + 1):
        for e in base.edges:
            edges.add(frozenset((v, i) for v in e))
    for i in range(1, n):
        for e in base.edges:
            union = {(u, i) for u in e} | {(u, i + 1) for u in e}
            if len(union) < r:
                continue
            for v in e:
                rest = union - {(v, i), (v, i + 1)}
                for fill in combinations(sorted(rest, key=repr), r - 2):
                    edges.add(frozenset({(v, i), (v, i + 1), *fill}))
    return edges


def unlabel(h):
    def split(x):
        v, i = x.rsplit("@", 1)
        return v, int(i)
    return {frozenset(split(x) for x in e) for e in h.edges}


class TestPrism:
    TRI = Hypergraph.from_edges([("a", "b", "c")])

    def test_single_edge_counts(self):
        p = prism(PrismSpec(self.TRI, 2, 3))
        assert len(p.vertices) == 6 and len(p.edges) == 14

    @pytest.mark.parametrize("base, n, r", [
        (TRI, 2, 3), (TRI, 3, 4), (basic("cycle", 4).relabel(str), 3, 3),
        (Hypergraph.from_edges([("1", "2", "3"), ("3", "4")]), 2, 4),
    ])
    def test_matches_definition(self, base, n, r):
        assert unlabel(prism(PrismSpec(base, n, r))) == prism_oracle(base, n, r)

    @pytest.mark.parametrize("base", [basic("cycle", 4), TRI, Hypergraph.from_edges([(1, 2, 3), (3, 4)])])
    @pytest.mark.parametrize("n", [2, 3])
    def test_r2_is_product_with_path(self, base, n):
        p = prism(PrismSpec(base, n, 2))
        relabelled = p.relabel(lambda x: (x.rsplit("@", 1)[0], int(x.rsplit("@", 1)[1]) - 1))
        grid = cartesian_product([base, basic("path", n)]).relabel(lambda t: (str(t[0]), t[1]))
        assert set(relabelled.vertices) == set(grid.vertices)
        assert set(relabelled.edges) == set(grid.edges)

    @settings(max_examples=20)
    @given(connected_hypergraphs(min_n=2, max_n=4, max_rank=3), st.integers(2, 3), st.integers(2, 4))
    def test_connected(self, base, n, r):
        if 2 * max(len(e) for e in base.edges) < r:
            return
        assert is_connected(prism(PrismSpec(base, n, r)))

    @pytest.mark.parametrize("n, r", [(1, 3), (2, 1), (2, 7)])
    def test_invalid(self, n, r):
        with pytest.raises(ConstructionError):
            prism(PrismSpec(self.TRI, n, r))

    def test_disconnected_base(self):
        with pytest.raises(ConstructionError):
            prism(PrismSpec(Hypergraph([1, 2]), 2, 2))


def path_host(*vs):
    return Hypergraph(vs, list(zip(vs, vs[1:])))


class TestHypertrees:
    def test_valid_examples(self):
        hypertree_from_host(path_host(1, 2, 3, 4, 5), [(1, 2, 3), (3, 4, 5)])
        star = Hypergraph(["c", "x", "y", "z"], [("c", "x"), ("c", "y"), ("c", "z")])
        hypertree_from_host(star, [("c", "x", "y"), ("c", "z")])

    def test_edge_not_a_subtree(self):
        with pytest.raises(ConstructionError, match=r"\[1, 3\]"):
            hypertree_from_host(path_host(1, 2, 3), [(1, 3), (2, 3)])

    def test_disconnected(self):
        with pytest.raises(ConstructionError):
            hypertree_from_host(path_host(1, 2, 3), [(1, 2)])

    def test_host_must_be_tree(self):
        with pytest.raises(ConstructionError):
            hypertree_from_host(basic("cycle", 3), [(0, 1, 2)])

    def test_host_path(self):
        assert host_path(path_host(1, 2, 3, 4), 4, 2) == [4, 3, 2]

    def test_single_vertex(self):
        t, host = random_hypertree(1, 3, 2, seed=0)
        assert t.vertices == (0,) and not t.edges

    @given(st.integers(1, 12), st.integers(2, 5), st.integers(0, 10), st.integers(0, 2**32 - 1))
    def test_random_hypertree_is_certified(self, n, max_edge, count, seed):
        t, host = random_hypertree(n, max_edge, count, seed)
        assert hypertree_from_host(host, t.edges) == t
        assert host_path_violations(t, host) == 0
        assert max((len(e) for e in t.edges), default=0) <= max(max_edge, 2)

    def test_seed_42_is_cop_win(self):
        t, _ = random_hypertree(10, 4, 6, seed=42)
        assert cop_number(t) == 1

    def test_infeasible(self):
        with pytest.raises(ConstructionError):
            random_hypertree(0, 3, 1)
        with pytest.raises(ConstructionError):
            random_hypertree(5, 1, 1)


class TestDeterminism:
    @given(st.integers(0, 2**32 - 1))
    def test_generators_repeat_per_seed(self, seed):
        assert random_tree(9, seed) == random_tree(9, seed)
        assert random_hypertree(9, 4, 5, seed) == random_hypertree(9, 4, 5, seed)
        assert random_connected_hypergraph(7, 4, seed) == random_connected_hypergraph(7, 4, seed)

    @given(st.integers(1, 12), st.integers(0, 2**32 - 1))
    def test_random_tree_is_tree(self, n, seed):
        t = random_tree(n, seed)
        assert len(t.edges) == n - 1 and is_connected(t)

    @given(st.integers(1, 9), st.integers(2, 5), st.integers(0, 2**32 - 1))
    def test_random_hypergraph_shape(self, n, rank, seed):
        h = random_connected_hypergraph(n, rank, seed)
        assert is_connected(h) and len(h.vertices) == n
        assert all(2 <= len(e) <= rank for e in h.edges)
