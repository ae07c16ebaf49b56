"""Isomorph-free enumeration, cross-checked against published class counts
and the networkx graph atlas."""

import networkx as nx
import pytest

from forcing_lab import encode_graph6, is_connected
from forcing_lab.enumeration import (ALL_GRAPH_CLASS_COUNTS,
                                     CONNECTED_CLASS_COUNTS, enumerate_all,
                                     enumerate_connected, labeled_trees,
                                     random_trees)
from forcing_lab.graphs import degree_stats, is_tree


def _to_nx(g):
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    return nxg


@pytest.mark.parametrize("n", range(1, 8))
def test_connected_counts_match_published_totals(n):
    assert sum(1 for _ in enumerate_connected(n)) == CONNECTED_CLASS_COUNTS[n]


@pytest.mark.parametrize("n", range(1, 8))
def test_all_class_counts_match_published_totals(n):
    assert sum(1 for _ in enumerate_all(n)) == ALL_GRAPH_CLASS_COUNTS[n]


def test_counts_match_networkx_atlas():
    # Independent oracle: the atlas holds every graph on up to 7 vertices.
    atlas_connected = {n: 0 for n in range(1, 8)}
    for nxg in nx.graph_atlas_g()[1:]:
        n = nxg.number_of_nodes()
        if 1 <= n <= 7 and nx.is_connected(nxg):
            atlas_connected[n] += 1
    for n in range(1, 8):
        assert atlas_connected[n] == CONNECTED_CLASS_COUNTS[n]


def test_out_of_range_points_to_graph6_files():
    with pytest.raises(ValueError, match="graph6"):
        list(enumerate_connected(9))
    with pytest.raises(ValueError):
        list(enumerate_connected(0))


def test_all_representatives_connected_and_distinct():
    for n in range(1, 7):
        seen = set()
        for g in enumerate_connected(n):
            assert g.n == n
            assert is_connected(g)
            text = encode_graph6(g)
            assert text not in seen
            seen.add(text)


def _triangle_count(g):
    total = 0
    for u, v in g.edges():
        total += (g.neighbor_masks[u] & g.neighbor_masks[v]).bit_count()
    return total // 3


def test_pairwise_non_isomorphic_spot_check():
    # Invariant vector first (degree sequence + triangle count); any two
    # representatives that collide on it must be told apart by a real
    # isomorphism test.
    for n in range(3, 7):
        buckets = {}
        for g in enumerate_connected(n):
            key = (tuple(sorted(degree_stats(g)[2])), _triangle_count(g))
            buckets.setdefault(key, []).append(g)
        for group in buckets.values():
            for i in range(len(group)):
                for j in range(i + 1, len(group)):
                    assert not nx.is_isomorphic(_to_nx(group[i]),
                                                _to_nx(group[j]))


def test_enumeration_is_deterministic():
    first = [encode_graph6(g) for g in enumerate_connected(6)]
    second = [encode_graph6(g) for g in enumerate_connected(6)]
    assert first == second


class TestTreeStreams:
    @pytest.mark.parametrize("n,count", [(2, 1), (3, 3), (4, 16), (5, 125),
                                         (6, 1296)])
    def test_labeled_tree_counts(self, n, count):
        trees = list(labeled_trees(n))
        assert len(trees) == count
        assert all(is_tree(t) and t.n == n for t in trees)

    def test_labeled_trees_reject_tiny(self):
        with pytest.raises(ValueError):
            list(labeled_trees(1))

    def test_random_trees_are_seed_reproducible(self):
        a = [t.edges() for t in random_trees(20, 9, 16, seed=42)]
        b = [t.edges() for t in random_trees(20, 9, 16, seed=42)]
        c = [t.edges() for t in random_trees(20, 9, 16, seed=43)]
        assert a == b
        assert a != c

    def test_random_trees_sizes_and_shape(self):
        trees = list(random_trees(50, 5, 9, seed=1))
        assert len(trees) == 50
        assert all(5 <= t.n <= 9 for t in trees)
        assert all(is_tree(t) for t in trees)
