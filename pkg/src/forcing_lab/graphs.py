"""Immutable simple undirected graphs with bit-packed vertex subsets.

Vertex ids are dense 0-based integers (bitmask-friendly); any external
label belongs in ``Graph.name``. Includes the named-family generators,
degree/connectivity utilities, the edge-boundary count, and a plain
edge-list text format.
"""

from itertools import combinations

from . import _kernels


class VertexSet:
    """Bit-packed subset of {0, ..., capacity-1}."""

    __slots__ = ("mask", "capacity")

    def __init__(self, mask, capacity):
        if mask < 0:
            raise ValueError("mask must be non-negative")
        if mask >> capacity:
            raise ValueError(f"member id out of range for capacity {capacity}")
        object.__setattr__(self, "mask", mask)
        object.__setattr__(self, "capacity", capacity)

    def __setattr__(self, name, value):
        raise AttributeError("VertexSet is immutable")

    @classmethod
    def from_ids(cls, ids, capacity):
        mask = 0
        for v in ids:
            if not 0 <= v < capacity:
                raise ValueError(f"vertex id {v} out of range for capacity {capacity}")
            mask |= 1 << v
        return cls(mask, capacity)

    @classmethod
    def empty(cls, capacity):
        return cls(0, capacity)

    @classmethod
    def full(cls, capacity):
        return cls((1 << capacity) - 1, capacity)

    def ids(self):
        """Members in ascending order."""
        return tuple(self)

    def complement(self):
        return VertexSet(~self.mask & ((1 << self.capacity) - 1), self.capacity)

    def issubset(self, other):
        return self.mask & ~other.mask == 0

    def __contains__(self, v):
        return 0 <= v < self.capacity and (self.mask >> v) & 1 == 1

    def __iter__(self):
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __len__(self):
        return self.mask.bit_count()

    def __or__(self, other):
        return VertexSet(self.mask | other.mask, max(self.capacity, other.capacity))

    def __and__(self, other):
        return VertexSet(self.mask & other.mask, max(self.capacity, other.capacity))

    def __eq__(self, other):
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.mask == other.mask and self.capacity == other.capacity

    def __hash__(self):
        return hash((self.mask, self.capacity))

    def __repr__(self):
        return f"VertexSet({{{', '.join(map(str, self))}}}, capacity={self.capacity})"


class Graph:
    """Simple undirected graph; adjacency stored per vertex as a bitmask.

    Immutable after construction. Invariants enforced: symmetric adjacency,
    no loops, all neighbor ids < n.
    """

    __slots__ = ("n", "neighbor_masks", "name")

    def __init__(self, n, edges=(), name=None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "neighbor_masks", tuple(masks))
        object.__setattr__(self, "name", name)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_neighbor_masks(cls, masks, name=None):
        n = len(masks)
        g = cls(n, (), name=name)
        for v, m in enumerate(masks):
            if m >> n:
                raise ValueError(f"neighbor id out of range at vertex {v}")
            if (m >> v) & 1:
                raise ValueError(f"loop at vertex {v} not allowed")
        for v, m in enumerate(masks):
            for u in VertexSet(m, n):
                if not (masks[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(g, "neighbor_masks", tuple(masks))
        return g

    @classmethod
    def from_upper_triangle_mask(cls, bits, n, name=None):
        """Rebuild from the packed upper triangle (bit j(j-1)/2 + i for pair i<j)."""
        edges = []
        idx = 0
        for j in range(1, n):
            for i in range(j):
                if (bits >> idx) & 1:
                    edges.append((i, j))
                idx += 1
        if bits >> idx:
            raise ValueError("mask has bits beyond the upper triangle")
        return cls(n, edges, name=name)

    def upper_triangle_mask(self):
        bits = 0
        idx = 0
        for j in range(1, self.n):
            col = self.neighbor_masks[j]
            for i in range(j):
                if (col >> i) & 1:
                    bits |= 1 << idx
                idx += 1
        return bits

    def adj(self, v):
        """Neighbors of v as a frozenset."""
        return frozenset(VertexSet(self.neighbor_masks[v], self.n))

    def degree(self, v):
        return self.neighbor_masks[v].bit_count()

    def edge_count(self):
        return sum(m.bit_count() for m in self.neighbor_masks) // 2

    def edges(self):
        """Edges as (u, v) with u < v, sorted."""
        out = []
        for v in range(self.n):
            m = self.neighbor_masks[v] & ((1 << v) - 1)
            for u in VertexSet(m, self.n):
                out.append((u, v))
        return sorted(out)

    def has_edge(self, u, v):
        return 0 <= u < self.n and (self.neighbor_masks[u] >> v) & 1 == 1

    def vertex_set(self, ids):
        return VertexSet.from_ids(ids, self.n)

    def relabel(self, perm, name=None):
        """New graph with vertex v renamed to perm[v]."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()], name=name)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.neighbor_masks == other.neighbor_masks

    def __hash__(self):
        return hash((self.n, self.neighbor_masks))

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self.edge_count()}>"


# -- named families ----------------------------------------------------------


def cycle(m):
    if m < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(m, [(i, (i + 1) % m) for i in range(m)], name=f"C_{m}")


def complete(n):
    if n < 1:
        raise ValueError("a complete graph needs at least 1 vertex")
    return Graph(n, combinations(range(n), 2), name=f"K_{n}")


def complete_bipartite(a, b):
    if a < 1 or b < 1:
        raise ValueError("both parts need at least 1 vertex")
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return Graph(a + b, edges, name=f"K_{{{a},{b}}}")


def path(n):
    if n < 1:
        raise ValueError("a path needs at least 1 vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)], name=f"P_{n}")


def star(leaves):
    if leaves < 1:
        raise ValueError("a star needs at least 1 leaf")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)],
                 name=f"K_{{1,{leaves}}}")


def tree_from_pruefer(seq):
    """Decode a Pruefer sequence into the labeled tree on len(seq)+2 vertices."""
    import heapq

    seq = tuple(seq)
    n = len(seq) + 2
    for s in seq:
        if not 0 <= s < n:
            raise ValueError(f"sequence entry {s} out of range for n={n}")
    degree = [1] * n
    for s in seq:
        degree[s] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for s in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, s))
        degree[s] -= 1
        if degree[s] == 1:
            heapq.heappush(leaves, s)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Graph(n, edges, name=f"tree{list(seq)}")


FAMILIES = {
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "path": (path, 1),
    "star": (star, 1),
    "tree_from_pruefer": (tree_from_pruefer, None),
}


def generate(family, params):
    """Build a named-family graph; ``params`` is a sequence of integers."""
    if family not in FAMILIES:
        raise ValueError(
            f"unknown family {family!r}; choose from {sorted(FAMILIES)}"
        )
    fn, arity = FAMILIES[family]
    params = list(params)
    if arity is None:
        return fn(params)
    if len(params) != arity:
        raise ValueError(f"family {family!r} takes {arity} parameter(s)")
    return fn(*params)


# -- invariants and utilities -------------------------------------------------


def degree_stats(g):
    """(max degree, min degree, degree sequence by vertex id)."""
    if g.n < 1:
        raise ValueError("degree stats need at least one vertex")
    seq = tuple(m.bit_count() for m in g.neighbor_masks)
    return max(seq), min(seq), seq


def is_connected(g):
    """Single-traversal connectivity; graphs with at most one vertex count
    as connected."""
    if g.n <= 1:
        return True
    full = (1 << g.n) - 1
    return _kernels.connected_in(g.neighbor_masks, full)


def is_k_connected(g, k):
    """Exact k-connectivity: n > k and no vertex cut of fewer than k vertices.

    Checks every removal set of size < k; fine at desk scale (the
    verification sweeps cap at n <= 9).
    """
    if k < 1:
        raise ValueError("k must be positive")
    if g.n <= k:
        return False
    full = (1 << g.n) - 1
    nbrs = g.neighbor_masks
    for size in range(k):
        for cut in combinations(range(g.n), size):
            rest = full
            for v in cut:
                rest &= ~(1 << v)
            if not _kernels.connected_in(nbrs, rest):
                return False
    return True


def connected_within(g, s):
    """True iff the subgraph induced by VertexSet ``s`` is connected."""
    return _kernels.connected_in(g.neighbor_masks, s.mask)


def edge_boundary(g, s):
    """Number of edges with exactly one endpoint in VertexSet ``s``."""
    inside = s.mask
    total = 0
    for v in s:
        total += (g.neighbor_masks[v] & ~inside).bit_count()
    return total


def is_tree(g):
    return g.n >= 1 and g.edge_count() == g.n - 1 and is_connected(g)


def leaves(g):
    """Vertices of degree exactly 1, ascending."""
    return tuple(v for v in range(g.n) if g.degree(v) == 1)


def is_bipartite_parts(g):
    """Two-coloring of a connected graph: (part0, part1) VertexSets, or None."""
    if g.n == 0:
        return VertexSet.empty(0), VertexSet.empty(0)
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u in VertexSet(g.neighbor_masks[v], g.n):
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return None
    part0 = VertexSet.from_ids([v for v in range(g.n) if color[v] == 0], g.n)
    part1 = VertexSet.from_ids([v for v in range(g.n) if color[v] == 1], g.n)
    return part0, part1


# -- edge-list text format -----------------------------------------------------


def parse_edge_list(text):
    """Parse the plain format: first line "n m", then m lines "u v"."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError('edge-list header must be "n m"')
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError('edge-list header must be two integers "n m"') from None
    if len(lines) - 1 != m:
        raise ValueError(f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph(n, edges)


def format_edge_list(g):
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"
