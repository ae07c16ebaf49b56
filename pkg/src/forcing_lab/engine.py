"""The k-forcing process: closures, forcing tests, and deterministic traces.

The color change rule: a colored vertex with at most k non-colored
neighbors colors all of them. A set forces the graph when repeated
application colors every vertex. All operations are pure functions on
immutable inputs.
"""

import json
from dataclasses import dataclass

from . import _kernels
from .graphs import Graph, VertexSet


class TraceError(ValueError):
    """A trace event violates the coloring rule during replay."""


def _as_mask(g, s):
    if isinstance(s, VertexSet):
        if s.capacity != g.n:
            raise ValueError(f"set capacity {s.capacity} != graph order {g.n}")
        return s.mask
    return VertexSet.from_ids(s, g.n).mask


def closure(g, k, s):
    """Colored set at the fixed point of the rule, starting from ``s``.

    The result is the unique smallest superset of ``s`` closed under the
    rule; application order does not matter.
    """
    if k < 1:
        raise ValueError("k must be positive")
    mask = _kernels.closure(g.neighbor_masks, k, _as_mask(g, s))
    return VertexSet(mask, g.n)


def is_forcing_set(g, k, s):
    """True iff the closure of ``s`` colors every vertex."""
    if k < 1:
        raise ValueError("k must be positive")
    full = (1 << g.n) - 1
    return _kernels.closure(g.neighbor_masks, k, _as_mask(g, s)) == full


def stalled_frontier(g, k, state):
    """For each colored vertex that still has non-colored neighbors, its
    count of non-colored neighbors, as sorted (vertex, count) pairs."""
    if k < 1:
        raise ValueError("k must be positive")
    colored = _as_mask(g, state)
    out = []
    for v in VertexSet(colored, g.n):
        w = g.neighbor_masks[v] & ~colored
        if w:
            out.append((v, w.bit_count()))
    return out


@dataclass(frozen=True)
class ForcingTrace:
    """Ordered (forcer, forced) events proving what a set colors.

    Each event colors exactly one vertex; at the moment it fires, the
    forcer is colored and has at most k non-colored neighbors, one of
    which is the forced vertex.
    """

    k: int
    initial: VertexSet
    events: tuple

    def final_state(self):
        mask = self.initial.mask
        for _, forced in self.events:
            mask |= 1 << forced
        return VertexSet(mask, self.initial.capacity)

    def forces_all(self):
        return len(self.final_state()) == self.initial.capacity

    def to_json_line(self):
        return json.dumps({
            "k": self.k,
            "initial": list(self.initial),
            "events": [[u, v] for u, v in self.events],
        })

    @classmethod
    def from_json_line(cls, line, capacity):
        data = json.loads(line)
        return cls(
            k=data["k"],
            initial=VertexSet.from_ids(data["initial"], capacity),
            events=tuple((u, v) for u, v in data["events"]),
        )


def trace(g, k, s):
    """Deterministic forcing trace from ``s`` to its closure.

    At each step the eligible (forcer, forced) pair with the smallest
    (forcer id, forced id) fires, coloring just that one vertex. Single
    firings reach the same fixed point as batch application: coloring
    never raises a non-colored-neighbor count, so eligibility is never
    lost, only gained.
    """
    if k < 1:
        raise ValueError("k must be positive")
    initial = VertexSet(_as_mask(g, s), g.n)
    nbrs = g.neighbor_masks
    colored = initial.mask
    events = []
    while True:
        fired = None
        for u in VertexSet(colored, g.n):
            w = nbrs[u] & ~colored
            if w and w.bit_count() <= k:
                fired = (u, (w & -w).bit_length() - 1)
                break
        if fired is None:
            break
        colored |= 1 << fired[1]
        events.append(fired)
    return ForcingTrace(k=k, initial=initial, events=tuple(events))


def replay(g, tr):
    """Re-run a trace, checking every event against the rule.

    Returns the final colored VertexSet; raises TraceError on the first
    event whose forcer is non-colored, over its non-colored-neighbor
    budget, or forcing a vertex that is not an eligible neighbor.
    """
    if not isinstance(g, Graph):
        raise TypeError("replay needs a Graph")
    colored = tr.initial.mask
    for step, (u, v) in enumerate(tr.events):
        if not (colored >> u) & 1:
            raise TraceError(f"event {step}: forcer {u} is not colored")
        w = g.neighbor_masks[u] & ~colored
        if not (w >> v) & 1:
            raise TraceError(
                f"event {step}: {v} is not a non-colored neighbor of {u}")
        if w.bit_count() > tr.k:
            raise TraceError(
                f"event {step}: forcer {u} has {w.bit_count()} non-colored "
                f"neighbors, over the budget k={tr.k}")
        colored |= 1 << v
    return VertexSet(colored, g.n)
