"""Kernel backend selection.

The compiled extension is preferred when present and the graph fits in a
64-bit mask; otherwise the pure-Python kernels take over. Set
``FORCING_LAB_BACKEND=pure`` or ``=compiled`` to force one side (the
benchmark and the test matrix do).
"""

import os

from . import pure as _pure

try:
    from . import _ckern as _compiled
except ImportError:
    _compiled = None

_FORCED = os.environ.get("FORCING_LAB_BACKEND")
if _FORCED not in (None, "", "pure", "compiled"):
    raise RuntimeError(
        f"FORCING_LAB_BACKEND must be 'pure' or 'compiled', got {_FORCED!r}"
    )
if _FORCED == "compiled" and _compiled is None:
    raise RuntimeError(
        "FORCING_LAB_BACKEND=compiled but the extension is not built; "
        "reinstall with a working C compiler"
    )

HAVE_COMPILED = _compiled is not None
_C_MAX_VERTICES = 62


def active_backend(n=0):
    """Backend name that a kernel call for an n-vertex graph would use."""
    return _impl(n).BACKEND


def _impl(n):
    if _FORCED == "pure":
        return _pure
    if _FORCED == "compiled":
        if n > _C_MAX_VERTICES:
            raise ValueError(
                f"compiled kernels support at most {_C_MAX_VERTICES} vertices"
            )
        return _compiled
    if _compiled is not None and n <= _C_MAX_VERTICES:
        return _compiled
    return _pure


def closure(nbrs, k, colored):
    return _impl(len(nbrs)).closure(nbrs, k, colored)


def connected_in(nbrs, mask):
    return _impl(len(nbrs)).connected_in(nbrs, mask)


def search_level_exhaustive(nbrs, k, size, node_budget):
    return _impl(len(nbrs)).search_level_exhaustive(nbrs, k, size, node_budget)


def search_level_pruned(nbrs, k, size, node_budget):
    return _impl(len(nbrs)).search_level_pruned(nbrs, k, size, node_budget)


def search_level_constrained(nbrs, k, size, node_budget):
    return _impl(len(nbrs)).search_level_constrained(nbrs, k, size, node_budget)


def canonical_mask(nbrs):
    return _impl(len(nbrs)).canonical_mask(nbrs)
