from itertools import combinations, product

import pytest

from efl import EflInstance, build_hn


def brute_memberships(cliques):
    """Scan every (vertex, clique) pair; independent of EflInstance.memberships."""
    vertices = sorted({v for c in cliques for v in c})
    return {v: tuple(i + 1 for i, c in enumerate(cliques) if v in c) for v in vertices}


def brute_colorable(cliques, k):
    """Try every assignment of k colors; only for tiny instances."""
    vertices = sorted({v for c in cliques for v in c})
    for colors in product(range(1, k + 1), repeat=len(vertices)):
        col = dict(zip(vertices, colors))
        if all(col[a] != col[b] for c in cliques for a, b in combinations(sorted(c), 2)):
            return True
    return False


def disjoint_cliques(n):
    return EflInstance(n, [[f"v_{i}_{k}" for k in range(1, n + 1)] for i in range(1, n + 1)])


@pytest.fixture
def hn3():
    return build_hn(3)


@pytest.fixture
def disjoint3():
    return disjoint_cliques(3)
