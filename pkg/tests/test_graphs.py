"""Graph construction, families, degree/connectivity utilities, and the
edge-list format. Connectivity is cross-checked against networkx."""

import random

import networkx as nx
import pytest

from forcing_lab import (Graph, VertexSet, complete, complete_bipartite,
                         cycle, degree_stats, edge_boundary, generate,
                         is_connected, is_k_connected, parse_edge_list,
                         format_edge_list, path, star, tree_from_pruefer)
from forcing_lab.enumeration import enumerate_connected
from forcing_lab.graphs import is_bipartite_parts, is_tree, leaves


class TestVertexSet:
    def test_from_ids_and_iteration(self):
        s = VertexSet.from_ids([4, 0, 2], 5)
        assert list(s) == [0, 2, 4]
        assert len(s) == 3
        assert 2 in s and 1 not in s

    def test_complement(self):
        s = VertexSet.from_ids([0, 2], 4)
        assert list(s.complement()) == [1, 3]
        assert s.complement().complement() == s

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            VertexSet.from_ids([5], 5)
        with pytest.raises(ValueError):
            VertexSet(1 << 5, 5)

    def test_immutable(self):
        s = VertexSet.from_ids([1], 3)
        with pytest.raises(AttributeError):
            s.mask = 0

    def test_set_algebra(self):
        a = VertexSet.from_ids([0, 1], 4)
        b = VertexSet.from_ids([1, 2], 4)
        assert list(a | b) == [0, 1, 2]
        assert list(a & b) == [1]
        assert a.issubset(a | b)


class TestGraph:
    def test_adjacency_is_symmetric(self):
        g = Graph(3, [(0, 1)])
        assert g.has_edge(0, 1) and g.has_edge(1, 0)
        assert g.adj(0) == frozenset({1})
        assert g.adj(2) == frozenset()

    def test_rejects_loops_and_bad_ids(self):
        with pytest.raises(ValueError):
            Graph(3, [(1, 1)])
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])

    def test_from_neighbor_masks_rejects_asymmetry(self):
        with pytest.raises(ValueError):
            Graph.from_neighbor_masks([0b010, 0b000, 0b000])

    def test_upper_triangle_mask_round_trip(self):
        rng = random.Random(7)
        for _ in range(50):
            n = rng.randint(1, 9)
            edges = [(i, j) for i in range(n) for j in range(i + 1, n)
                     if rng.random() < 0.4]
            g = Graph(n, edges)
            assert Graph.from_upper_triangle_mask(g.upper_triangle_mask(), n) == g

    def test_relabel_preserves_structure(self):
        g = path(4)
        h = g.relabel([3, 2, 1, 0])
        assert sorted(h.degree(v) for v in range(4)) == [1, 1, 2, 2]


class TestFamilies:
    def test_cycle(self):
        g = cycle(5)
        assert g.n == 5 and g.edge_count() == 5
        assert all(g.degree(v) == 2 for v in range(5))
        assert is_connected(g)

    def test_complete_bipartite_balanced(self):
        g = complete_bipartite(3, 3)
        assert g.n == 6 and g.edge_count() == 9
        assert all(g.degree(v) == 3 for v in range(6))
        assert is_bipartite_parts(g) is not None

    def test_complete(self):
        g = complete(5)
        assert g.edge_count() == 10
        assert degree_stats(g) == (4, 4, (4, 4, 4, 4, 4))

    def test_star_and_path(self):
        assert degree_stats(star(3))[:2] == (3, 1)
        assert degree_stats(path(2))[:2] == (1, 1)

    def test_pruefer_00_is_star(self):
        # Decode by hand: both entries attach the smallest leaf to vertex 0,
        # and the final edge joins 0 to 3.
        g = tree_from_pruefer([0, 0])
        assert g.n == 4
        assert g.edges() == [(0, 1), (0, 2), (0, 3)]

    def test_pruefer_round_sizes(self):
        assert tree_from_pruefer(()).n == 2
        g = tree_from_pruefer([3, 3, 3, 4])
        assert g.n == 6 and is_tree(g)

    def test_param_validation(self):
        with pytest.raises(ValueError):
            cycle(2)
        with pytest.raises(ValueError):
            complete(0)
        with pytest.raises(ValueError):
            complete_bipartite(0, 2)
        with pytest.raises(ValueError):
            tree_from_pruefer([5])

    def test_generate_dispatch(self):
        assert generate("cycle", [6]) == cycle(6)
        assert generate("complete_bipartite", [2, 3]) == complete_bipartite(2, 3)
        assert generate("tree_from_pruefer", [0, 0]) == tree_from_pruefer([0, 0])
        with pytest.raises(ValueError):
            generate("hypercube", [3])
        with pytest.raises(ValueError):
            generate("cycle", [3, 4])


def test_degree_stats_petersen(petersen):
    assert degree_stats(petersen)[:2] == (3, 3)


def test_degree_stats_requires_vertices():
    with pytest.raises(ValueError):
        degree_stats(Graph(0))


class TestConnectivity:
    def test_basics(self):
        assert is_connected(cycle(5))
        assert is_connected(path(3))
        assert not is_connected(Graph(2))
        assert is_connected(Graph(1))

    def test_k_connectivity_examples(self):
        assert is_k_connected(cycle(5), 1)
        assert is_k_connected(cycle(5), 2)
        assert not is_k_connected(cycle(5), 3)
        assert is_k_connected(path(3), 1)
        assert not is_k_connected(path(3), 2)
        assert is_k_connected(complete(4), 3)
        assert not is_k_connected(complete(1), 1)

    def test_matches_networkx_connectivity(self):
        for n in range(2, 7):
            for g in enumerate_connected(n):
                nxg = nx.Graph()
                nxg.add_nodes_from(range(g.n))
                nxg.add_edges_from(g.edges())
                kappa = nx.node_connectivity(nxg)
                for k in range(1, 4):
                    assert is_k_connected(g, k) == (kappa >= k), (g.edges(), k)


class TestEdgeBoundary:
    def test_examples(self):
        k4 = complete(4)
        assert edge_boundary(k4, k4.vertex_set([0, 1])) == 4
        assert edge_boundary(k4, VertexSet.empty(4)) == 0
        c6 = cycle(6)
        assert edge_boundary(c6, c6.vertex_set([0, 1, 2])) == 2

    def test_complement_symmetry(self):
        rng = random.Random(11)
        for _ in range(60):
            n = rng.randint(1, 10)
            edges = [(i, j) for i in range(n) for j in range(i + 1, n)
                     if rng.random() < 0.5]
            g = Graph(n, edges)
            s = VertexSet(rng.getrandbits(n), n)
            assert edge_boundary(g, s) == edge_boundary(g, s.complement())


def test_leaves():
    assert leaves(star(3)) == (1, 2, 3)
    assert leaves(path(4)) == (0, 3)
    assert leaves(cycle(4)) == ()


class TestEdgeListFormat:
    def test_round_trip(self):
        g = complete_bipartite(2, 3)
        assert parse_edge_list(format_edge_list(g)) == g

    def test_parse(self):
        g = parse_edge_list("3 2\n0 1\n1 2\n")
        assert g == path(3)

    def test_rejects_bad_header_and_counts(self):
        with pytest.raises(ValueError):
            parse_edge_list("")
        with pytest.raises(ValueError):
            parse_edge_list("3\n0 1\n")
        with pytest.raises(ValueError):
            parse_edge_list("3 2\n0 1\n")
        with pytest.raises(ValueError):
            parse_edge_list("2 1\n0 2\n")
