"""Pure-Python kernels for the hot inner loops.

All kernels speak a single low-level dialect: a graph is a list of
neighbor bitmasks (``nbrs[v]`` has bit ``u`` set iff ``uv`` is an edge)
and a vertex subset is one Python integer. The compiled extension in
``_ckern.pyx`` implements the same functions with identical semantics
(same return values, same node counts); this module is the fallback for
interpreters without the extension and the reference for n > 62.
"""

BACKEND = "pure"


def closure(nbrs, k, colored):
    """Fixed point of the coloring rule from the initial set ``colored``.

    A colored vertex with between 1 and k non-colored neighbors colors
    all of them. The result is the unique smallest superset closed under
    the rule, independent of application order.
    """
    changed = True
    while changed:
        changed = False
        m = colored
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            w = nbrs[v] & ~colored
            if w and w.bit_count() <= k:
                colored |= w
                changed = True
    return colored


def connected_in(nbrs, mask):
    """True iff the subgraph induced by the vertices in ``mask`` is connected.

    The empty set counts as connected (degenerate case; callers decide).
    """
    if mask == 0:
        return True
    seen = mask & -mask
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            nxt |= nbrs[v]
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


def _gosper_next(mask):
    c = mask & -mask
    r = mask + c
    return (((r ^ mask) >> 2) // c) | r


def search_level_exhaustive(nbrs, k, size, node_budget):
    """Scan every ``size``-subset in ascending mask order for a forcing set.

    Returns (witness_mask or None, nodes, aborted). ``nodes`` counts
    closure evaluations; the scan aborts once it would exceed
    ``node_budget``.
    """
    n = len(nbrs)
    full = (1 << n) - 1
    if size < 0 or size > n:
        return None, 0, False
    if size == 0:
        return (0 if full == 0 else None), 0, False
    mask = (1 << size) - 1
    last = mask << (n - size)
    nodes = 0
    while True:
        if nodes >= node_budget:
            return None, nodes, True
        nodes += 1
        if closure(nbrs, k, mask) == full:
            return mask, nodes, False
        if mask == last:
            return None, nodes, False
        mask = _gosper_next(mask)


def search_level_pruned(nbrs, k, size, node_budget):
    """Depth-first search for a forcing set of exactly ``size`` vertices.

    Vertices are tried in ascending id order and a candidate already inside
    the closure of the current partial set is skipped (adding it cannot
    enlarge the closure), so the first hit is the lexicographically
    smallest witness at this size. Levels must be run in ascending size
    order for that skip to be exact.

    Returns (witness_mask or None, nodes, aborted).
    """
    n = len(nbrs)
    full = (1 << n) - 1
    if size < 1 or size > n:
        return None, 0, False
    nodes = 0
    chosen = [0] * size
    base_cl = [0] * (size + 1)
    cand = [0] * size
    depth = 0
    while depth >= 0:
        v = cand[depth]
        if v > n - (size - depth):
            depth -= 1
            if depth >= 0:
                cand[depth] += 1
            continue
        if (base_cl[depth] >> v) & 1:
            cand[depth] += 1
            continue
        if nodes >= node_budget:
            return None, nodes, True
        nodes += 1
        new_cl = closure(nbrs, k, base_cl[depth] | (1 << v))
        if depth + 1 == size:
            if new_cl == full:
                witness = 1 << v
                for i in range(depth):
                    witness |= 1 << chosen[i]
                return witness, nodes, False
            cand[depth] += 1
        else:
            chosen[depth] = v
            base_cl[depth + 1] = new_cl
            depth += 1
            cand[depth] = v + 1
    return None, nodes, False


def search_level_constrained(nbrs, k, size, node_budget):
    """Exhaustive level scan restricted to sets whose complement is connected.

    Subsets whose (nonempty) complement induces a disconnected subgraph are
    filtered out before the closure test and do not count as nodes.
    """
    n = len(nbrs)
    full = (1 << n) - 1
    if size < 1 or size > n:
        return None, 0, False
    mask = (1 << size) - 1
    last = mask << (n - size)
    nodes = 0
    while True:
        comp = full & ~mask
        if comp and connected_in(nbrs, comp):
            if nodes >= node_budget:
                return None, nodes, True
            nodes += 1
            if closure(nbrs, k, mask) == full:
                return mask, nodes, False
        if mask == last:
            return None, nodes, False
        mask = _gosper_next(mask)


def canonical_mask(nbrs):
    """Canonical certificate: the minimum upper-triangle mask over all
    vertex relabelings.

    Bit order follows the graph6 payload (column-major upper triangle,
    earlier bits more significant), so two graphs get the same certificate
    iff they are isomorphic. Branch-and-bound over partial relabelings;
    prefixes that already exceed the best known column are cut.
    """
    n = len(nbrs)
    if n <= 1:
        return 0
    # best[j] = column j of the smallest labeling found so far; 1 << j is an
    # unattainable sentinel (columns hold j bits).
    best = [1 << j for j in range(n)]
    perm = [0] * n

    def place(pos, used):
        if pos == n:
            return
        for v in range(n):
            bit = 1 << v
            if used & bit:
                continue
            col = 0
            nv = nbrs[v]
            for i in range(pos):
                col = (col << 1) | ((nv >> perm[i]) & 1)
            if pos > 0:
                if col > best[pos]:
                    continue
                if col < best[pos]:
                    best[pos] = col
                    for j in range(pos + 1, n):
                        best[j] = 1 << j
            perm[pos] = v
            place(pos + 1, used | bit)

    place(0, 0)
    out = 0
    base = 0
    for j in range(1, n):
        col = best[j]
        for i in range(j):
            if (col >> (j - 1 - i)) & 1:
                out |= 1 << (base + i)
        base += j
    return out
