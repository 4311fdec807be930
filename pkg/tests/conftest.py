import itertools

import pytest

from topoforge import kernels
from topoforge.operators import BUILTIN_KINDS, BiOperatorSpace, make_builtin
from topoforge.setcore import FiniteTopology, enumerate_topologies


def naive_topologies(n):
    """Every topology on ``range(n)`` as a set of frozensets, by direct scan."""
    points = frozenset(range(n))
    subsets = [frozenset(c) for r in range(n + 1) for c in itertools.combinations(range(n), r)]
    found = []
    for flags in itertools.product((False, True), repeat=len(subsets)):
        fam = {s for s, keep in zip(subsets, flags) if keep}
        if frozenset() not in fam or points not in fam:
            continue
        if all(u | v in fam and u & v in fam for u in fam for v in fam):
            found.append(frozenset(fam))
    return found


def small_topologies(max_n=3):
    for n in range(1, max_n + 1):
        yield from enumerate_topologies(n)


def builtin_bispaces(max_n=3):
    for top in small_topologies(max_n):
        for k1, k2 in itertools.product(BUILTIN_KINDS, repeat=2):
            yield BiOperatorSpace(top, make_builtin(k1, top), make_builtin(k2, top))


@pytest.fixture
def sierpinski():
    return FiniteTopology.sierpinski()


@pytest.fixture
def reference_space():
    # opens {}, {0}, {1}, {0, 1}, X on three points
    return FiniteTopology.from_masks(3, [0, 1, 2, 3, 7])


@pytest.fixture(params=sorted(kernels.backends()))
def backend(request):
    return kernels.backends()[request.param]
