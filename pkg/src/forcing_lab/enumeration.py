"""Exhaustive small-graph and tree enumeration.

Connected graphs come from vertex augmentation with canonical-certificate
deduplication: every class on m vertices is some class on m-1 vertices
plus one new vertex with some neighborhood, so trying all neighborhoods
over all (m-1)-classes covers everything, and the minimum-relabeling
certificate collapses isomorphs. This is the built-in fallback for the
verification sweeps; larger orders are expected to arrive as graph6 files
from external generators.

Trees are streamed from Pruefer sequences: the exhaustive stream walks
every sequence (all n^(n-2) labeled trees), the random stream draws
seeded sequences.
"""

import random
from functools import lru_cache
from itertools import product

from . import _kernels
from .graphs import Graph, is_connected, tree_from_pruefer

MAX_ENUMERATION_ORDER = 8

# Published class counts, used as enumeration self-checks.
ALL_GRAPH_CLASS_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
CONNECTED_CLASS_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def _mask_to_nbrs(bits, n):
    masks = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if (bits >> idx) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            idx += 1
    return masks


@lru_cache(maxsize=None)
def _canonical_classes(n):
    """Sorted canonical certificates of *all* graphs on n vertices."""
    if n == 1:
        return (0,)
    seen = set()
    for parent in _canonical_classes(n - 1):
        base = _mask_to_nbrs(parent, n - 1)
        new = n - 1
        for nbhd in range(1 << new):
            masks = list(base)
            masks.append(nbhd)
            m = nbhd
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                masks[v] |= 1 << new
            seen.add(_kernels.canonical_mask(masks))
    return tuple(sorted(seen))


def enumerate_connected(n):
    """Yield one representative per isomorphism class of connected graphs
    on n vertices, in canonical-certificate order.

    Supported for n <= 8 only; beyond that, supply a graph6 file produced
    by an external generator instead.
    """
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise ValueError(
            f"built-in enumeration covers 1 <= n <= {MAX_ENUMERATION_ORDER}; "
            "supply a graph6 file for larger orders")
    for cert in _canonical_classes(n):
        g = Graph.from_upper_triangle_mask(cert, n)
        if is_connected(g):
            yield g


def enumerate_all(n):
    """Like enumerate_connected but without the connectivity filter."""
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise ValueError(
            f"built-in enumeration covers 1 <= n <= {MAX_ENUMERATION_ORDER}; "
            "supply a graph6 file for larger orders")
    for cert in _canonical_classes(n):
        yield Graph.from_upper_triangle_mask(cert, n)


def labeled_trees(n):
    """Every labeled tree on n vertices, one per Pruefer sequence."""
    if n < 2:
        raise ValueError("labeled trees need at least 2 vertices")
    if n == 2:
        yield tree_from_pruefer(())
        return
    for seq in product(range(n), repeat=n - 2):
        yield tree_from_pruefer(seq)


def random_trees(count, min_n, max_n, seed):
    """Seeded stream of random labeled trees with min_n <= n <= max_n."""
    if count < 0:
        raise ValueError("count must be non-negative")
    if not 2 <= min_n <= max_n:
        raise ValueError("need 2 <= min_n <= max_n")
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(min_n, max_n)
        if n == 2:
            yield tree_from_pruefer(())
        else:
            yield tree_from_pruefer(rng.randrange(n) for _ in range(n - 2))
