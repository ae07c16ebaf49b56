# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitset kernels (uint64 masks, so n <= 62 after the graph6 cap).

Mirrors _kernels/pure.py exactly: same semantics, same witnesses, same
node counts. Keep the two in sync.
"""

BACKEND = "compiled"

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

ctypedef unsigned long long u64

cdef u64 ONE = 1


cdef inline u64 _closure(u64* nbrs, int n, int k, u64 colored) nogil:
    cdef bint changed = True
    cdef u64 m, w
    cdef int v
    while changed:
        changed = False
        m = colored
        while m:
            v = __builtin_ctzll(m)
            m &= m - 1
            w = nbrs[v] & ~colored
            if w != 0 and __builtin_popcountll(w) <= k:
                colored |= w
                changed = True
    return colored


cdef inline bint _connected_in(u64* nbrs, u64 mask) nogil:
    cdef u64 seen, frontier, nxt, m
    cdef int v
    if mask == 0:
        return True
    seen = mask & (0 - mask)
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            v = __builtin_ctzll(m)
            m &= m - 1
            nxt |= nbrs[v]
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


cdef inline u64 _gosper_next(u64 mask) nogil:
    cdef u64 c = mask & (0 - mask)
    cdef u64 r = mask + c
    return (((r ^ mask) >> 2) / c) | r


cdef int _load(object nbrs, u64* buf) except -1:
    cdef int n = len(nbrs)
    cdef int v
    if n > 62:
        raise ValueError("compiled kernels support at most 62 vertices")
    for v in range(n):
        buf[v] = nbrs[v]
    return n


def closure(nbrs, int k, colored):
    """See pure.closure."""
    cdef u64 buf[62]
    cdef int n = _load(nbrs, buf)
    cdef u64 start = colored
    return _closure(buf, n, k, start)


def connected_in(nbrs, mask):
    """See pure.connected_in."""
    cdef u64 buf[62]
    _load(nbrs, buf)
    cdef u64 m = mask
    return bool(_connected_in(buf, m))


def search_level_exhaustive(nbrs, int k, int size, long long node_budget):
    """See pure.search_level_exhaustive."""
    cdef u64 buf[62]
    cdef int n = _load(nbrs, buf)
    cdef u64 full = (ONE << n) - 1
    cdef u64 mask, last
    cdef long long nodes = 0
    if size < 0 or size > n:
        return None, 0, False
    if size == 0:
        return (0 if full == 0 else None), 0, False
    mask = (ONE << size) - 1
    last = mask << (n - size)
    while True:
        if nodes >= node_budget:
            return None, nodes, True
        nodes += 1
        if _closure(buf, n, k, mask) == full:
            return int(mask), nodes, False
        if mask == last:
            return None, nodes, False
        mask = _gosper_next(mask)


def search_level_pruned(nbrs, int k, int size, long long node_budget):
    """See pure.search_level_pruned."""
    cdef u64 buf[62]
    cdef int n = _load(nbrs, buf)
    cdef u64 full = (ONE << n) - 1
    cdef long long nodes = 0
    cdef int chosen[62]
    cdef u64 base_cl[63]
    cdef int cand[62]
    cdef int depth, v, i
    cdef u64 new_cl, witness
    if size < 1 or size > n:
        return None, 0, False
    base_cl[0] = 0
    cand[0] = 0
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
        new_cl = _closure(buf, n, k, base_cl[depth] | (ONE << v))
        if depth + 1 == size:
            if new_cl == full:
                witness = ONE << v
                for i in range(depth):
                    witness |= ONE << chosen[i]
                return int(witness), nodes, False
            cand[depth] += 1
        else:
            chosen[depth] = v
            base_cl[depth + 1] = new_cl
            depth += 1
            cand[depth] = v + 1
    return None, nodes, False


def search_level_constrained(nbrs, int k, int size, long long node_budget):
    """See pure.search_level_constrained."""
    cdef u64 buf[62]
    cdef int n = _load(nbrs, buf)
    cdef u64 full = (ONE << n) - 1
    cdef u64 mask, last, comp
    cdef long long nodes = 0
    if size < 1 or size > n:
        return None, 0, False
    mask = (ONE << size) - 1
    last = mask << (n - size)
    while True:
        comp = full & ~mask
        if comp != 0 and _connected_in(buf, comp):
            if nodes >= node_budget:
                return None, nodes, True
            nodes += 1
            if _closure(buf, n, k, mask) == full:
                return int(mask), nodes, False
        if mask == last:
            return None, nodes, False
        mask = _gosper_next(mask)


cdef void _place(u64* nbrs, int n, int pos, int* perm, u64 used, u64* best) nogil:
    cdef int v, i, j
    cdef u64 bit, col, nv
    if pos == n:
        return
    for v in range(n):
        bit = ONE << v
        if used & bit:
            continue
        nv = nbrs[v]
        col = 0
        for i in range(pos):
            col = (col << 1) | ((nv >> perm[i]) & 1)
        if pos > 0:
            if col > best[pos]:
                continue
            if col < best[pos]:
                best[pos] = col
                for j in range(pos + 1, n):
                    best[j] = ONE << j
        perm[pos] = v
        _place(nbrs, n, pos + 1, perm, used | bit, best)


def canonical_mask(nbrs):
    """See pure.canonical_mask."""
    cdef u64 buf[62]
    cdef int n = _load(nbrs, buf)
    cdef u64 best[62]
    cdef int perm[62]
    cdef int i, j, base
    cdef u64 col
    if n <= 1:
        return 0
    for j in range(n):
        best[j] = ONE << j
    _place(buf, n, 0, perm, 0, best)
    out = 0
    base = 0
    for j in range(1, n):
        col = best[j]
        for i in range(j):
            if (col >> (j - 1 - i)) & 1:
                out |= 1 << (base + i)
        base += j
    return out
