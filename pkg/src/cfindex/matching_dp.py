"""Dominating induced matchings of trees.

A matching M with T[V(M)] = M that is maximal is exactly an edge set such
that every other edge has one end, and only one, in V(M). For trees of at
least three vertices without degree-2 vertices such a matching exists iff
two colors suffice; its edges are the red ones.
"""

from __future__ import annotations

from .coloring import Matching, matching_to_coloring
from .decision import DecisionResult, Evidence
from .errors import PreconditionViolated, UnknownEdge
from .tree_core import Tree, norm_edge

__all__ = ["Matching", "is_dominating_induced", "find_dim", "decide_via_matching"]


def is_dominating_induced(t: Tree, m: Matching) -> bool:
    for u, v in m.edges:
        if not t.has_edge(u, v):
            raise UnknownEdge((u, v))
    if not m.is_matching():
        return False
    covered = m.vertices()
    for e in t.edges:
        if e in m.edges:
            continue
        u, v = e
        if (u in covered) == (v in covered):
            # both ends covered breaks inducedness, neither breaks maximality
            return False
    return True


# vertex states relative to the edge to its father
_TO_PARENT, _TO_CHILD, _FREE = 0, 1, 2


def find_dim(t: Tree) -> Matching | None:
    """A dominating induced matching, or None, by one bottom-up pass and one top-down pass."""
    adj = t.adj
    root = min(adj)
    parent = {root: -1}
    order = [root]
    for x in order:
        p = parent[x]
        for y in adj[x]:
            if y != p:
                parent[y] = x
                order.append(y)

    # ok[v] = (matched to father, matched to a son, unmatched) feasibility of Sub(v)
    ok: dict[int, tuple[bool, bool, bool]] = {}
    pick: dict[int, int] = {}
    for v in reversed(order):
        p = parent[v]
        all_free = True
        all_to_child = True
        n_bad_free = 0
        first_pairable = -1
        bad_free_son = -1
        for c in adj[v]:
            if c == p:
                continue
            oc = ok[c]
            if not oc[_FREE]:
                all_free = False
                n_bad_free += 1
                bad_free_son = c
            if not oc[_TO_CHILD]:
                all_to_child = False
            if oc[_TO_PARENT] and first_pairable < 0:
                first_pairable = c
        # matched to a son c: c must take the edge, every other son stays free
        to_child = False
        if n_bad_free == 0 and first_pairable >= 0:
            to_child = True
            pick[v] = first_pairable
        elif n_bad_free == 1 and ok[bad_free_son][_TO_PARENT]:
            to_child = True
            pick[v] = bad_free_son
        ok[v] = (all_free, to_child, all_to_child)

    r = ok[root]
    if r[_TO_CHILD]:
        state = {root: _TO_CHILD}
    elif r[_FREE]:
        state = {root: _FREE}
    else:
        return None
    edges = []
    for v in order:
        s = state[v]
        p = parent[v]
        for c in adj[v]:
            if c == p:
                continue
            if s == _FREE:
                state[c] = _TO_CHILD
            elif s == _TO_CHILD and pick[v] == c:
                state[c] = _TO_PARENT
                edges.append(norm_edge(v, c))
            else:
                state[c] = _FREE
    return Matching.of(edges)


def decide_via_matching(t: Tree) -> DecisionResult:
    if len(t) < 3:
        raise PreconditionViolated("need at least 3 vertices")
    if t.has_degree_two():
        raise PreconditionViolated("tree has a degree-2 vertex")
    m = find_dim(t)
    if m is None:
        return DecisionResult.three(Evidence.NO_MATCHING)
    return DecisionResult.two(matching_to_coloring(t, m))
