"""Sharp degree-based upper bounds and the extremal-family classifier.

Everything here is exact integer arithmetic: bounds are returned as
unreduced (numerator, denominator) pairs and every comparison is
cross-multiplied. No floating point, so equality detection cannot drift.
"""

from dataclasses import dataclass

from .graphs import degree_stats, is_bipartite_parts, is_connected


def forcing_upper_bound(n, max_degree, k):
    """Upper bound for the k-forcing number of a connected graph:
    ((max_degree - 2) * n + 2) / (max_degree + k - 2), as an unreduced
    (numerator, denominator) pair. Sharp; at k = 1 its equality cases are
    exactly the cycles, completes, and balanced complete bipartites."""
    if max_degree < 2:
        raise ValueError("bound needs max degree >= 2")
    if k < 1:
        raise ValueError("k must be positive")
    return (max_degree - 2) * n + 2, max_degree + k - 2


def degree_refined_bound(n, max_degree, min_degree):
    """Refinement of the k = 1 bound using the minimum degree:
    ((max_degree - 2) * n - (max_degree - min_degree) + 2) / (max_degree - 1).
    Coincides with forcing_upper_bound(n, max_degree, 1) on regular graphs
    and is strictly smaller otherwise."""
    if max_degree < 2:
        raise ValueError("bound needs max degree >= 2")
    if not 1 <= min_degree <= max_degree:
        raise ValueError("need 1 <= min_degree <= max_degree")
    return (max_degree - 2) * n - (max_degree - min_degree) + 2, max_degree - 1


def attains_equality(z, n, max_degree):
    """True iff z equals ((max_degree - 2) * n + 2) / (max_degree - 1),
    decided by cross-multiplication in exact integers."""
    if max_degree < 2:
        raise ValueError("equality test needs max degree >= 2")
    return z * (max_degree - 1) == (max_degree - 2) * n + 2


@dataclass(frozen=True)
class BoundReport:
    """Both bounds for one graph, plus the equality verdict given its
    exactly computed forcing number."""

    n: int
    max_degree: int
    min_degree: int
    k: int
    bound_num: int
    bound_den: int
    refined_num: int
    refined_den: int
    meets_equality: bool

    def to_dict(self):
        return {
            "n": self.n,
            "max_degree": self.max_degree,
            "min_degree": self.min_degree,
            "k": self.k,
            "bound_num": self.bound_num,
            "bound_den": self.bound_den,
            "refined_num": self.refined_num,
            "refined_den": self.refined_den,
            "meets_equality": self.meets_equality,
        }


def build_bound_report(g, k, z):
    """Assemble a BoundReport for graph ``g`` from its exact k = 1 forcing
    number ``z`` (callers compute it with the solver)."""
    dmax, dmin, _ = degree_stats(g)
    num, den = forcing_upper_bound(g.n, dmax, k)
    rnum, rden = degree_refined_bound(g.n, dmax, dmin)
    return BoundReport(
        n=g.n, max_degree=dmax, min_degree=dmin, k=k,
        bound_num=num, bound_den=den,
        refined_num=rnum, refined_den=rden,
        meets_equality=attains_equality(z, g.n, dmax),
    )


@dataclass(frozen=True)
class ExtremalClass:
    """Structural family tag for a bound-attaining graph.

    ``tag`` is "cycle", "complete", or "balanced_complete_bipartite";
    ``parameter`` is the cycle length for cycles and the degree for the
    other two families.
    """

    tag: str
    parameter: int


def classify_extremal(g):
    """Match a connected graph with max degree >= 2 against the three
    equality families; None when it is none of them.

    The families overlap on small orders; overlaps resolve in the fixed
    order complete > balanced_complete_bipartite > cycle, so K_3 reports
    "complete" and C_4 = K_{2,2} reports "balanced_complete_bipartite".
    """
    if not is_connected(g):
        raise ValueError("classification needs a connected graph")
    dmax, dmin, _ = degree_stats(g)
    if dmax < 2:
        raise ValueError("classification needs max degree >= 2")
    if dmin != dmax:
        return None
    d = dmax
    if d == g.n - 1:
        return ExtremalClass("complete", d)
    if g.n == 2 * d and is_bipartite_parts(g) is not None:
        # d-regular bipartite on 2d vertices forces parts of size d with
        # every cross pair adjacent.
        return ExtremalClass("balanced_complete_bipartite", d)
    if d == 2:
        return ExtremalClass("cycle", g.n)
    return None
