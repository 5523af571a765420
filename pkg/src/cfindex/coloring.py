"""Edge colorings of trees and the conflict-free condition.

Colors are positive integers. In two-color contexts 1 is red and 2 is blue.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping

from .errors import (
    EdgeListSyntaxError,
    LeafVertex,
    NotConflictFree,
    PartialColoring,
    PreconditionViolated,
    UnknownEdge,
)
from .tree_core import Edge, RootedTree, Tree, norm_edge

RED = 1
BLUE = 2


@dataclass(frozen=True)
class EdgeColoring:
    """A (possibly partial) map from edges to colors 1..palette_size."""

    assignment: Mapping[Edge, int]
    palette_size: int = 2

    def __post_init__(self):
        if self.palette_size < 1:
            raise ValueError("palette_size must be >= 1")

    @classmethod
    def of(cls, pairs: Mapping[Edge, int] | Iterable[tuple[Edge, int]], palette_size: int | None = None) -> EdgeColoring:
        items = pairs.items() if isinstance(pairs, Mapping) else pairs
        assignment = {norm_edge(*e): c for e, c in items}
        if palette_size is None:
            palette_size = max(assignment.values(), default=1)
        return cls(assignment, palette_size)

    def __getitem__(self, e: Edge) -> int:
        return self.assignment[norm_edge(*e)]

    def get(self, e: Edge) -> int | None:
        return self.assignment.get(norm_edge(*e))

    def __contains__(self, e: Edge) -> bool:
        return norm_edge(*e) in self.assignment

    def __len__(self) -> int:
        return len(self.assignment)

    def is_total(self, t: Tree) -> bool:
        return all(e in self.assignment for e in t.edges)

    def edges_of(self, color: int) -> set[Edge]:
        return {e for e, c in self.assignment.items() if c == color}

    def swapped(self, a: int = RED, b: int = BLUE) -> EdgeColoring:
        swap = {a: b, b: a}
        return EdgeColoring({e: swap.get(c, c) for e, c in self.assignment.items()}, self.palette_size)

    def permuted(self, perm: Mapping[int, int]) -> EdgeColoring:
        return EdgeColoring({e: perm[c] for e, c in self.assignment.items()}, self.palette_size)

    def restricted(self, edges: Iterable[Edge]) -> EdgeColoring:
        a = self.assignment
        return EdgeColoring({e: a[e] for e in edges if e in a}, self.palette_size)

    def relabeled(self, mapping: Mapping[int, int]) -> EdgeColoring:
        return EdgeColoring({norm_edge(mapping[u], mapping[v]): c for (u, v), c in self.assignment.items()}, self.palette_size)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return dict(self.assignment) == dict(other.assignment)

    def __hash__(self) -> int:
        return hash(frozenset(self.assignment.items()))


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges."""

    edges: frozenset = field(default_factory=frozenset)

    @classmethod
    def of(cls, edges: Iterable[Edge]) -> Matching:
        return cls(frozenset(norm_edge(*e) for e in edges))

    def vertices(self) -> set[int]:
        return {x for e in self.edges for x in e}

    def is_matching(self) -> bool:
        vs = [x for e in self.edges for x in e]
        return len(vs) == len(set(vs))

    def __iter__(self):
        return iter(sorted(self.edges))

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, e) -> bool:
        return norm_edge(*e) in self.edges


def _check_edge(t: Tree, e: Edge) -> Edge:
    u, v = e
    if not t.has_edge(u, v):
        raise UnknownEdge(e)
    return norm_edge(u, v)


def closed_neighborhood(t: Tree, e: Edge) -> set[Edge]:
    u, v = _check_edge(t, e)
    return set(t.incident(u)) | set(t.incident(v))


def conflict_free_colors_of_edge(t: Tree, c: EdgeColoring, e: Edge) -> set[int]:
    counts: Counter[int] = Counter()
    for f in closed_neighborhood(t, e):
        color = c.assignment.get(f)
        if color is None:
            raise PartialColoring(f"edge {f} is uncolored")
        counts[color] += 1
    return {color for color, k in counts.items() if k == 1}


@dataclass(frozen=True)
class Verification:
    valid: bool
    witness: Edge | None = None

    def __bool__(self) -> bool:
        return self.valid

    def __str__(self) -> str:
        if self.valid:
            return "valid"
        return f"invalid {self.witness[0]} {self.witness[1]}"


def verify_conflict_free(t: Tree, c: EdgeColoring) -> Verification:
    """Check that every edge has a color occurring exactly once in its closed neighborhood.

    Returns the smallest violating edge when invalid.
    """
    a = c.assignment
    counts: dict[int, Counter] = {}
    for v, nbrs in t.adj.items():
        cnt: Counter[int] = Counter()
        for w in nbrs:
            color = a.get((v, w) if v < w else (w, v))
            if color is None:
                raise PartialColoring(f"edge {norm_edge(v, w)} is uncolored")
            cnt[color] += 1
        counts[v] = cnt
    for u, v in t.edges:
        cu, cv = counts[u], counts[v]
        own = a[(u, v)]
        for color in cu.keys() | cv.keys():
            if cu[color] + cv[color] - (color == own) == 1:
                break
        else:
            return Verification(False, (u, v))
    return Verification(True)


def tree_conflict_free_color(t: Tree, c: EdgeColoring, require_no_deg2: bool = True) -> int:
    """The one color that is conflict-free for every edge.

    On trees without degree-2 vertices every conflict-free two-coloring has
    exactly one such color.
    """
    if require_no_deg2 and t.has_degree_two():
        raise PreconditionViolated("tree has a degree-2 vertex")
    if not verify_conflict_free(t, c):
        raise NotConflictFree("coloring is not conflict-free")
    common: set[int] | None = None
    for e in t.edges:
        cf = conflict_free_colors_of_edge(t, c, e)
        common = cf if common is None else common & cf
        if not common:
            break
    if not common or len(common) != 1:
        raise NotConflictFree(f"no single color is conflict-free on every edge (got {common})")
    return next(iter(common))


def canonicalize(t: Tree, c: EdgeColoring) -> EdgeColoring:
    """Swap red and blue if needed so that red is the tree's conflict-free color."""
    if tree_conflict_free_color(t, c) == RED:
        return c
    return c.swapped()


def unique_color_of_vertex(t: Tree, c: EdgeColoring, v: int) -> tuple[int, Edge] | None:
    """(shared color, odd edge) when all but one edge at v share a color, else None."""
    inc = t.incident(v)
    if len(inc) < 2:
        return None
    colors = []
    for e in inc:
        color = c.get(e)
        if color is None:
            raise PartialColoring(f"edge {e} is uncolored")
        colors.append(color)
    counts = Counter(colors)
    if len(counts) != 2:
        return None
    (c1, k1), (c2, k2) = counts.items()
    if k1 == 1 and k2 == 1:
        # two edges of different colors: either reading works, report the smaller odd edge
        odd = min(inc)
        return (c2 if colors[inc.index(odd)] == c1 else c1, odd)
    if k1 == 1:
        odd_color, shared = c1, c2
    elif k2 == 1:
        odd_color, shared = c2, c1
    else:
        return None
    return shared, inc[colors.index(odd_color)]


class VertexType(Enum):
    S = "S"
    D = "D"


def vertex_type(rt: RootedTree, c: EdgeColoring, v: int) -> VertexType:
    """S when every out-edge of v is blue, D when one is red."""
    if not rt.children[v]:
        raise LeafVertex(f"vertex {v} has no sons")
    red = False
    for e in rt.out_edges(v):
        color = c.get(e)
        if color is None:
            raise PartialColoring(f"edge {e} is uncolored")
        red = red or color == RED
    return VertexType.D if red else VertexType.S


def red_matching(t: Tree, c: EdgeColoring) -> Matching:
    return Matching.of(canonicalize(t, c).edges_of(RED))


def matching_to_coloring(t: Tree, m: Matching | Iterable[Edge]) -> EdgeColoring:
    if not isinstance(m, Matching):
        m = Matching.of(m)
    for e in m.edges:
        _check_edge(t, e)
    return EdgeColoring({e: RED if e in m.edges else BLUE for e in t.edges}, 2)


def parse_coloring(text: str) -> EdgeColoring:
    pairs = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3 or not all(p.isdecimal() for p in parts):
            raise EdgeListSyntaxError(lineno, raw, "expected 'u v color'")
        u, v, color = map(int, parts)
        if color < 1:
            raise EdgeListSyntaxError(lineno, raw, "colors start at 1")
        pairs[norm_edge(u, v)] = color
    return EdgeColoring.of(pairs)


def format_coloring(c: EdgeColoring) -> str:
    return "".join(f"{u} {v} {col}\n" for (u, v), col in sorted(c.assignment.items()))


def read_coloring(path) -> EdgeColoring:
    with open(path, encoding="utf-8") as fh:
        return parse_coloring(fh.read())


def write_coloring(c: EdgeColoring, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_coloring(c))
