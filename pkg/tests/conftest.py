import pytest

from forcing_lab import Graph
from forcing_lab import _kernels
from forcing_lab._kernels import pure as pure_kernels

_BACKENDS = [pure_kernels]
if _kernels.HAVE_COMPILED:
    from forcing_lab._kernels import _ckern as compiled_kernels
    _BACKENDS.append(compiled_kernels)


@pytest.fixture(params=_BACKENDS, ids=lambda mod: mod.BACKEND)
def kernels(request):
    """Run the test once per available kernel backend."""
    return request.param


@pytest.fixture
def petersen():
    edges = ([(i, (i + 1) % 5) for i in range(5)]
             + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
             + [(i, i + 5) for i in range(5)])
    return Graph(10, edges, name="Petersen")


@pytest.fixture
def spider_4_leaves():
    # Four legs of length 2 glued at vertex 0.
    edges = [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6), (0, 7), (7, 8)]
    return Graph(9, edges, name="spider")
