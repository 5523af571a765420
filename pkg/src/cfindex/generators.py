"""Instance generators: full trees, family members, random trees, path-joined
instances and the short-path obstruction search."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .errors import BadBranching, BadMultiplicities, TooLarge
from .matching_dp import find_dim
from .oracle import enumerate_cf_2_colorings, enumerate_trees, is_cf_2_colorable
from .patterns import Family
from .tree_core import RootedTree, Tree, tree_sum

MAX_FULL_LEVEL = 8


def gen_full_tree(level: int, branching: int | Sequence[int] = 2) -> RootedTree:
    """Full tree with `level` vertex levels whose root has a single son.

    `branching` is one son count for every inner level, or a list with one
    count per inner level (levels 1 .. level-2).
    """
    if level > MAX_FULL_LEVEL:
        raise TooLarge(f"level {level} exceeds {MAX_FULL_LEVEL}")
    if level < 2:
        raise BadBranching("a full tree here has at least two levels")
    n_inner = level - 2
    if isinstance(branching, int):
        counts = [branching] * n_inner
    else:
        counts = list(branching)
        if len(counts) != n_inner:
            raise BadBranching(f"need {n_inner} branching factors, got {len(counts)}")
    if any(b < 2 for b in counts):
        raise BadBranching("every inner vertex needs at least two sons")
    edges = [(0, 1)]
    layer = [1]
    nxt = 2
    for b in counts:
        new = []
        for x in layer:
            for _ in range(b):
                edges.append((x, nxt))
                new.append(nxt)
                nxt += 1
        layer = new
    return RootedTree.from_tree(Tree(edges), 0)


_FAMILY_KEYS = {
    Family.F1: ("k1",),
    Family.F2: ("k2", "k3"),
    Family.F3: ("k4", "k5"),
    Family.F4: ("k6", "k7"),
}


def _as_family(family) -> Family:
    if isinstance(family, Family):
        return family
    if isinstance(family, int):
        return Family(family)
    return Family[str(family).upper()]


def gen_family(family, multiplicities: dict[str, int], branching: int = 2) -> RootedTree:
    """A member of the family as the sum of its full parts.

    The result is rooted at the fresh vertex 0; vertex 1 is the surficial
    vertex joining the parts.
    """
    fam = _as_family(family)
    ks = {k: multiplicities.get(k, 0) for k in _FAMILY_KEYS[fam]}
    if any(v < 0 for v in ks.values()):
        raise BadMultiplicities(f"negative multiplicity in {ks}")
    # number of full parts of level 2, 3, 4, 5
    if fam is Family.F1:
        if ks["k1"] <= 0:
            raise BadMultiplicities("F1 needs k1 > 0")
        counts = (ks["k1"], 1, 0, 0)
    elif fam is Family.F2:
        if ks["k2"] <= 0 or ks["k3"] <= 0:
            raise BadMultiplicities("F2 needs k2 > 0 and k3 > 0")
        counts = (ks["k2"], 0, ks["k3"], 0)
    elif fam is Family.F3:
        if ks["k5"] <= 0:
            raise BadMultiplicities("F3 needs k5 > 0")
        counts = (ks["k4"], 1, ks["k5"], 0)
    else:
        if ks["k6"] + ks["k7"] <= 0:
            raise BadMultiplicities("F4 needs k6 + k7 > 0")
        counts = (ks["k6"], 0, ks["k7"], 1)
    parts = []
    for level, k in zip((2, 3, 4, 5), counts):
        parts.extend(gen_full_tree(level, branching) for _ in range(k))
    return tree_sum(parts)


def _shuffled(edges: list[tuple[int, int]], n: int, rng: random.Random) -> Tree:
    perm = list(range(n))
    rng.shuffle(perm)
    return Tree([(perm[a], perm[b]) for a, b in edges], check=False)


def _pop_random(items: list[int], rng: random.Random) -> int:
    i = rng.randrange(len(items))
    items[i], items[-1] = items[-1], items[i]
    return items.pop()


def gen_random_no_deg2(n: int, seed: int = 0, colorable: bool = False) -> Tree:
    """Random tree on n >= 4 vertices with no vertex of degree 2, deterministic per seed.

    Grows from K_{1,3} by giving a leaf two sons or giving an inner vertex
    one more leaf. With `colorable` the growth keeps a dominating induced
    matching, so the result always has index 2.
    """
    if n < 4:
        raise ValueError("no tree on fewer than 4 vertices lacks degree-2 vertices except K1, K2")
    rng = random.Random(seed)
    if colorable:
        return _shuffled(_grow_colorable(n, rng), n, rng)
    edges = [(0, 1), (0, 2), (0, 3)]
    leaves = [1, 2, 3]
    inner = [0]
    split_p = rng.choice((0.5, 0.7, 0.9))
    nxt = 4
    while nxt < n:
        if n - nxt >= 2 and rng.random() < split_p:
            x = _pop_random(leaves, rng)
            for _ in range(2):
                edges.append((x, nxt))
                leaves.append(nxt)
                nxt += 1
            inner.append(x)
        else:
            x = inner[rng.randrange(len(inner))]
            edges.append((x, nxt))
            leaves.append(nxt)
            nxt += 1
    return _shuffled(edges, n, rng)


def _grow_colorable(n: int, rng: random.Random) -> list[tuple[int, int]]:
    # K_{1,3} with matched edge 0-1; the lists partition vertices by (matched?, leaf?)
    edges = [(0, 1), (0, 2), (0, 3)]
    m_inner, m_leaf, u_inner, u_leaf = [0], [1], [], [2, 3]
    nxt = 4

    def gadget(y: int) -> None:
        # y - w, with w matched to a new leaf z and given one more leaf l
        nonlocal nxt
        w, z, l = nxt, nxt + 1, nxt + 2
        nxt += 3
        edges.extend([(y, w), (w, z), (w, l)])
        m_inner.append(w)
        m_leaf.append(z)
        u_leaf.append(l)

    while nxt < n:
        room = n - nxt
        r = rng.random()
        if room >= 6 and u_leaf and r < 0.2:
            l = _pop_random(u_leaf, rng)
            u_inner.append(l)
            gadget(l)
            gadget(l)
        elif room >= 3 and u_inner and r < 0.45:
            gadget(u_inner[rng.randrange(len(u_inner))])
        elif room >= 2 and m_leaf and r < 0.7:
            z = _pop_random(m_leaf, rng)
            m_inner.append(z)
            for _ in range(2):
                edges.append((z, nxt))
                u_leaf.append(nxt)
                nxt += 1
        else:
            x = m_inner[rng.randrange(len(m_inner))]
            edges.append((x, nxt))
            u_leaf.append(nxt)
            nxt += 1
    return edges


def gen_long_path_instance(seed: int, max_cores: int = 4, core_size: tuple[int, int] = (4, 16),
                      interior: tuple[int, int] = (3, 7)) -> Tree:
    """Random tree whose degree->=3 parts are 2-colorable and whose degree-2
    paths have at least five vertices.

    Colorable cores are joined (and given dangling tails) through paths of at
    least three degree-2 vertices attached at matched inner vertices.
    """
    rng = random.Random(seed)
    k = rng.randint(1, max_cores)
    edges: list[tuple[int, int]] = []
    anchors: list[list[int]] = []
    nxt = 0
    for i in range(k):
        size = rng.randint(*core_size)
        core = gen_random_no_deg2(size, rng.randrange(1 << 30), colorable=True)
        m = find_dim(core)
        matched_inner = sorted(v for e in m.edges for v in e if core.degree(v) >= 3)
        offset = nxt
        edges.extend((a + offset, b + offset) for a, b in core.edges)
        anchors.append([v + offset for v in matched_inner])
        nxt += size
        if i == 0:
            continue
        j = rng.randrange(i)
        a = rng.choice(anchors[j])
        b = rng.choice(anchors[i])
        chain = [a]
        for _ in range(rng.randint(*interior)):
            chain.append(nxt)
            nxt += 1
        chain.append(b)
        edges.extend(zip(chain, chain[1:]))
    for _ in range(rng.randint(0, k)):
        a = rng.choice(rng.choice(anchors))
        chain = [a]
        for _ in range(rng.randint(interior[0] + 1, interior[1] + 1)):
            chain.append(nxt)
            nxt += 1
        edges.extend(zip(chain, chain[1:]))
    return _shuffled(edges, nxt, rng)


@dataclass(frozen=True)
class Counterexample:
    core: Tree
    attach: tuple[int, int]
    short_path_vertices: int
    short_tree: Tree
    long_tree: Tree


def join_cores(core: Tree, a: int, b: int, n_interior: int) -> Tree:
    """Two copies of `core` joined by a path through n_interior new vertices
    between a (first copy) and b (second copy)."""
    n = max(core.vertices) + 1
    edges = list(core.edges) + [(x + n, y + n) for x, y in core.edges]
    chain = [a] + [2 * n + i for i in range(n_interior)] + [b + n]
    edges.extend(zip(chain, chain[1:]))
    return Tree(edges)


def gen_counterexample_search(max_core: int) -> Counterexample | None:
    """Smallest core with a unique coloring (up to swapping colors) such that
    two copies joined by a 3- or 4-vertex path need three colors, while the
    same join through a 5-vertex path needs two."""
    if max_core > 11:
        raise TooLarge("cores are limited to 11 vertices so the joined tree stays within oracle limits")
    for n in range(4, max_core + 1):
        for core in enumerate_trees(n, no_deg2=True):
            if len(enumerate_cf_2_colorings(core)) != 2:
                continue
            inner = [v for v in core.vertices if core.degree(v) >= 3]
            for n_interior in (1, 2):
                for a in inner:
                    for b in inner:
                        if b < a:
                            continue
                        short = join_cores(core, a, b, n_interior)
                        if is_cf_2_colorable(short):
                            continue
                        long = join_cores(core, a, b, 3)
                        if is_cf_2_colorable(long):
                            return Counterexample(core, (a, b), n_interior + 2, short, long)
    return None
