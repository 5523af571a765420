import random

import pytest
from hypothesis import strategies as st

from cfindex.tree_core import Tree


def path(n):
    return Tree([(i, i + 1) for i in range(n - 1)])


def star(k, center=0):
    return Tree([(center, center + 1 + i) for i in range(k)])


def double_star(a=2, b=2):
    """Centers 0 and 1 joined by an edge; a leaves on 0 and b leaves on 1."""
    edges = [(0, 1)]
    nxt = 2
    for c, k in ((0, a), (1, b)):
        for _ in range(k):
            edges.append((c, nxt))
            nxt += 1
    return Tree(edges)


def two_stars_joined(interior):
    """Centers 0 and 1 of two K_{1,3}s joined through `interior` new vertices."""
    edges = [(0, 10), (0, 11), (1, 12), (1, 13)]
    chain = [0] + [20 + i for i in range(interior)] + [1]
    edges += list(zip(chain, chain[1:]))
    return Tree(edges)


def random_tree(n, seed):
    rng = random.Random(seed)
    return Tree([(i, rng.randrange(i)) for i in range(1, n)])


@st.composite
def trees(draw, min_n=2, max_n=14):
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    return Tree([(i, p) for i, p in zip(range(1, n), parents)])


@st.composite
def no_deg2_trees(draw, max_n=60):
    from cfindex.generators import gen_random_no_deg2

    n = draw(st.integers(4, max_n))
    seed = draw(st.integers(0, 2**31))
    return gen_random_no_deg2(n, seed, colorable=draw(st.booleans()))


@pytest.fixture
def k13():
    return star(3)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
