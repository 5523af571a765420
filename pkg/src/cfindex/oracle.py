"""Brute-force ground truth for small trees.

Nothing here is clever on purpose: the search tries colorings edge by edge
and the tree enumerator deduplicates by canonical codes. Everything else in
the package is checked against these functions.
"""

from __future__ import annotations

import os
from functools import lru_cache
from typing import Iterator

from .coloring import EdgeColoring, verify_conflict_free
from .errors import NoColoringWithin, TooLarge
from .tree_core import Edge, RootedTree, Tree, norm_edge

DEFAULT_LIMIT_K3 = 20
DEFAULT_LIMIT_K2 = 24
MAX_ENUM_N = 16


def oracle_limits() -> tuple[int, int]:
    """Edge limits (k >= 3 search, k <= 2 search); CFX_ORACLE_LIMIT overrides.

    The variable holds either one integer for both or "K3,K2".
    """
    raw = os.environ.get("CFX_ORACLE_LIMIT")
    if not raw:
        return DEFAULT_LIMIT_K3, DEFAULT_LIMIT_K2
    parts = [int(p) for p in raw.split(",")]
    if len(parts) == 1:
        return parts[0], parts[0]
    return parts[0], parts[1]


class _Search:
    """Edges in BFS order plus, for every position, the edges whose closed
    neighborhood becomes fully assigned there."""

    def __init__(self, t: Tree):
        root = min(t.adj)
        rt = RootedTree.from_tree(t, root)
        self.edges: list[Edge] = [norm_edge(rt.parent[x], x) for x in rt.order[1:]]
        index = {e: i for i, e in enumerate(self.edges)}
        self.nbhd: list[list[int]] = []
        closing: list[list[int]] = [[] for _ in self.edges]
        for i, (u, v) in enumerate(self.edges):
            nb = sorted({index[f] for f in t.incident(u)} | {index[f] for f in t.incident(v)})
            self.nbhd.append(nb)
            closing[nb[-1]].append(i)
        self.closing = closing

    def ok_at(self, colors: list[int], pos: int) -> bool:
        for i in self.closing[pos]:
            counts: dict[int, int] = {}
            for j in self.nbhd[i]:
                counts[colors[j]] = counts.get(colors[j], 0) + 1
            if 1 not in counts.values():
                return False
        return True

    def first(self, k: int) -> list[int] | None:
        m = len(self.edges)
        colors = [0] * m

        def rec(pos: int, used: int) -> bool:
            if pos == m:
                return True
            # a fresh color may only be the next one in palette order
            for col in range(1, min(used + 1, k) + 1):
                colors[pos] = col
                if self.ok_at(colors, pos) and rec(pos + 1, max(used, col)):
                    return True
            colors[pos] = 0
            return False

        if m == 0:
            return []
        return list(colors) if rec(0, 0) else None

    def all(self, k: int) -> Iterator[list[int]]:
        m = len(self.edges)
        colors = [0] * m

        def rec(pos: int):
            if pos == m:
                yield list(colors)
                return
            for col in range(1, k + 1):
                colors[pos] = col
                if self.ok_at(colors, pos):
                    yield from rec(pos + 1)
            colors[pos] = 0

        yield from rec(0)

    def to_coloring(self, colors: list[int], k: int) -> EdgeColoring:
        return EdgeColoring(dict(zip(self.edges, colors)), k)


def brute_force_index(t: Tree, max_k: int = 3) -> tuple[int, EdgeColoring]:
    """Smallest k <= max_k admitting a conflict-free coloring, with a witness."""
    lim3, lim2 = oracle_limits()
    m = t.n_edges
    if m > lim2:
        raise TooLarge(f"{m} edges exceeds the oracle limit of {lim2}")
    if m == 0:
        return 1, EdgeColoring({}, 1)
    search = _Search(t)
    for k in range(1, max_k + 1):
        if k >= 3 and m > lim3:
            raise TooLarge(f"{m} edges exceeds the oracle limit of {lim3} for {k} colors")
        found = search.first(k)
        if found is not None:
            witness = search.to_coloring(found, k)
            assert verify_conflict_free(t, witness)
            return k, witness
    if max_k >= 3:
        raise AssertionError(f"tree {t!r} has no conflict-free {max_k}-coloring; every tree needs at most 3 colors")
    raise NoColoringWithin(max_k)


def enumerate_cf_2_colorings(t: Tree) -> list[EdgeColoring]:
    """Every conflict-free red/blue coloring, both palette orders included."""
    _, lim2 = oracle_limits()
    if t.n_edges > lim2:
        raise TooLarge(f"{t.n_edges} edges exceeds the oracle limit of {lim2}")
    if t.n_edges == 0:
        return []
    search = _Search(t)
    return [search.to_coloring(cols, 2) for cols in search.all(2)]


def is_cf_2_colorable(t: Tree) -> bool:
    _, lim2 = oracle_limits()
    if t.n_edges > lim2:
        raise TooLarge(f"{t.n_edges} edges exceeds the oracle limit of {lim2}")
    if t.n_edges == 0:
        return False
    return _Search(t).first(2) is not None


def brute_force_dim_exists(t: Tree) -> bool:
    """Whether some matching M has every edge outside M touching V(M) in exactly one end.

    Enumerates all matchings; independent of the dynamic program it checks.
    """
    edges = t.edges

    def good(m: list[Edge]) -> bool:
        covered = {x for e in m for x in e}
        mset = set(m)
        for u, v in edges:
            if (u, v) in mset:
                continue
            if (u in covered) == (v in covered):
                return False
        return True

    def rec(i: int, m: list[Edge], used: set[int]) -> bool:
        if i == len(edges):
            return good(m)
        if rec(i + 1, m, used):
            return True
        u, v = edges[i]
        if u not in used and v not in used:
            m.append(edges[i])
            used |= {u, v}
            hit = rec(i + 1, m, used)
            m.pop()
            used -= {u, v}
            return hit
        return False

    return rec(0, [], set())


# --- free tree enumeration -------------------------------------------------

def _centers(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    if n <= 2:
        return list(range(n))
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return layer


def _rooted_code(adj: list[list[int]], root: int) -> str:
    # iterative post-order AHU encoding
    parent = {root: -1}
    order = [root]
    for x in order:
        for y in adj[x]:
            if y != parent[x]:
                parent[y] = x
                order.append(y)
    code: dict[int, str] = {}
    for x in reversed(order):
        kids = sorted(code[y] for y in adj[x] if y != parent[x])
        code[x] = "(" + "".join(kids) + ")"
    return code[root]


def canonical_code(t: Tree) -> str:
    """Isomorphism-invariant string for a free tree (center-rooted AHU code)."""
    ids = t.vertices
    pos = {v: i for i, v in enumerate(ids)}
    adj = [[pos[w] for w in t.adj[v]] for v in ids]
    return min(_rooted_code(adj, c) for c in _centers(adj))


def _tree_from_code(code: str) -> list[Edge]:
    edges = []
    stack: list[int] = []
    nxt = 0
    for ch in code:
        if ch == "(":
            v = nxt
            nxt += 1
            if stack:
                edges.append((stack[-1], v))
            stack.append(v)
        else:
            stack.pop()
    return edges


@lru_cache(maxsize=None)
def _codes(n: int) -> tuple[str, ...]:
    if n == 1:
        return ("()",)
    found = set()
    for code in _codes(n - 1):
        edges = _tree_from_code(code)
        adj: list[list[int]] = [[] for _ in range(n - 1)]
        for a, b in edges:
            adj[a].append(b)
            adj[b].append(a)
        for v in range(n - 1):
            adj.append([v])
            adj[v].append(n - 1)
            found.add(min(_rooted_code(adj, c) for c in _centers(adj)))
            adj[v].pop()
            adj.pop()
    return tuple(sorted(found))


def enumerate_trees(n: int, no_deg2: bool = False) -> Iterator[Tree]:
    """One tree per isomorphism class on n vertices, in canonical-code order."""
    if n > MAX_ENUM_N:
        raise TooLarge(f"enumeration is limited to n <= {MAX_ENUM_N}")
    if n < 1:
        return
    for code in _codes(n):
        edges = _tree_from_code(code)
        t = Tree(edges, range(n))
        if no_deg2 and t.has_degree_two():
            continue
        yield t
