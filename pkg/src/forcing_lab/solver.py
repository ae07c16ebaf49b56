"""Exact minimum k-forcing sets.

Two independent routes to the same value: a plain size-ascending brute
force (the oracle) and a pruned depth-first search capped by a greedy
upper bound (the fast path). Both return the size and a witness; the
pruned search additionally guarantees the lexicographically smallest
witness at the optimum. A constrained variant restricts the search to
sets whose complement induces a connected subgraph.
"""

import time
from dataclasses import dataclass

from . import _kernels
from .graphs import VertexSet

DEFAULT_NODE_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """Search hit its node or wall-clock budget before proving an optimum.

    Carries the partial picture: ``nodes_explored`` so far, the last
    fully searched size, and ``best_known`` (a valid but possibly
    non-optimal SolveResult from the greedy bound, when one exists).
    """

    def __init__(self, message, nodes_explored, size_reached, best_known=None):
        super().__init__(message)
        self.nodes_explored = nodes_explored
        self.size_reached = size_reached
        self.best_known = best_known


@dataclass(frozen=True)
class SolveResult:
    """Outcome of a forcing-number computation.

    ``value`` is exact for methods "oracle" and "bnb"; for "greedy" it is
    only an upper bound. ``complement_empty`` flags the degenerate
    constrained solution S = V (no smaller forcing set has a connected
    nonempty complement).
    """

    value: int
    witness: VertexSet
    nodes_explored: int
    method: str
    k: int
    constrained: bool = False
    complement_empty: bool = False

    def to_dict(self):
        return {
            "value": self.value,
            "witness": list(self.witness),
            "nodes": self.nodes_explored,
            "method": self.method,
            "k": self.k,
            "constrained": self.constrained,
            "complement_empty": self.complement_empty,
        }


def _check_args(g, k):
    if g.n < 1:
        raise ValueError("forcing numbers need at least one vertex")
    if k < 1:
        raise ValueError("k must be positive")


def _deadline(time_budget):
    return None if time_budget is None else time.monotonic() + time_budget


def _check_deadline(deadline, nodes, size, best=None):
    if deadline is not None and time.monotonic() > deadline:
        raise BudgetExceeded(
            f"wall-clock budget exhausted after {nodes} nodes",
            nodes, size, best)


def brute_force_oracle(g, k=1, *, node_budget=DEFAULT_NODE_BUDGET,
                       time_budget=None):
    """Exact by construction: try subset sizes 1, 2, ... and within each
    size every subset in ascending mask order; the first forcing set found
    is returned.
    """
    _check_args(g, k)
    nbrs = g.neighbor_masks
    deadline = _deadline(time_budget)
    total = 0
    for size in range(1, g.n + 1):
        witness, nodes, aborted = _kernels.search_level_exhaustive(
            nbrs, k, size, node_budget - total)
        total += nodes
        if aborted:
            raise BudgetExceeded(
                f"node budget {node_budget} exhausted at subset size {size}",
                total, size - 1)
        if witness is not None:
            return SolveResult(size, VertexSet(witness, g.n), total, "oracle", k)
        _check_deadline(deadline, total, size)
    raise AssertionError("the full vertex set always forces")


def greedy_upper_bound(g, k=1):
    """Valid forcing set built greedily: repeatedly add the non-colored
    vertex whose addition grows the closure most, ties to the smallest id.
    Size is an upper bound on the k-forcing number."""
    _check_args(g, k)
    nbrs = g.neighbor_masks
    full = (1 << g.n) - 1
    chosen = 0
    cl = 0
    nodes = 0
    while cl != full:
        best_v = -1
        best_cl = 0
        best_gain = -1
        for v in range(g.n):
            if (cl >> v) & 1:
                continue
            cand = _kernels.closure(nbrs, k, cl | (1 << v))
            nodes += 1
            gain = cand.bit_count()
            if gain > best_gain:
                best_gain = gain
                best_v = v
                best_cl = cand
        chosen |= 1 << best_v
        cl = best_cl
    return SolveResult(chosen.bit_count(), VertexSet(chosen, g.n), nodes,
                       "greedy", k)


def solve(g, k=1, *, node_budget=DEFAULT_NODE_BUDGET, time_budget=None):
    """Exact k-forcing number via pruned size-ascending search.

    Matches brute_force_oracle on every input where both complete, and
    returns the lexicographically smallest witness at the optimum. The
    greedy bound caps the last size level; its closure evaluations count
    toward the node budget.
    """
    _check_args(g, k)
    greedy = greedy_upper_bound(g, k)
    nbrs = g.neighbor_masks
    deadline = _deadline(time_budget)
    total = greedy.nodes_explored
    if total >= node_budget:
        raise BudgetExceeded(
            f"node budget {node_budget} exhausted during the greedy bound",
            total, 0, greedy)
    for size in range(1, greedy.value + 1):
        witness, nodes, aborted = _kernels.search_level_pruned(
            nbrs, k, size, node_budget - total)
        total += nodes
        if aborted:
            raise BudgetExceeded(
                f"node budget {node_budget} exhausted at subset size {size}",
                total, size - 1, greedy)
        if witness is not None:
            return SolveResult(size, VertexSet(witness, g.n), total, "bnb", k)
        _check_deadline(deadline, total, size, greedy)
    raise AssertionError("greedy witness guarantees a hit at its own size")


def solve_connected_complement(g, k=1, *, node_budget=DEFAULT_NODE_BUDGET,
                               time_budget=None):
    """Minimum k-forcing set among those whose complement induces a
    connected subgraph, by restricted exhaustive search.

    When no proper subset qualifies, the answer degenerates to S = V
    (the empty complement); that case comes back flagged via
    ``complement_empty`` rather than silently.
    """
    _check_args(g, k)
    nbrs = g.neighbor_masks
    deadline = _deadline(time_budget)
    total = 0
    for size in range(1, g.n):
        witness, nodes, aborted = _kernels.search_level_constrained(
            nbrs, k, size, node_budget - total)
        total += nodes
        if aborted:
            raise BudgetExceeded(
                f"node budget {node_budget} exhausted at subset size {size}",
                total, size - 1)
        if witness is not None:
            return SolveResult(size, VertexSet(witness, g.n), total, "oracle",
                               k, constrained=True)
        _check_deadline(deadline, total, size)
    return SolveResult(g.n, VertexSet.full(g.n), total, "oracle", k,
                       constrained=True, complement_empty=True)
