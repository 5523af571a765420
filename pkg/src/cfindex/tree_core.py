"""Trees, leaf-rooted out-branchings, and the structural predicates built on them.

Vertex ids are arbitrary non-negative integers. Everything that has to pick
between vertices does so by ascending id, so all results are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Sequence

from .errors import EdgeListSyntaxError, EmptyList, IsRoot, NotALeaf, NotATree

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Tree:
    """An undirected tree with sorted adjacency lists.

    Instances are treated as immutable once built.
    """

    __slots__ = ("adj", "_edges")

    def __init__(self, edges: Iterable[Sequence[int]], vertices: Iterable[int] = (), *, check: bool = True):
        adj: dict[int, list[int]] = {v: [] for v in vertices}
        n_edges = 0
        for u, v in edges:
            if check:
                if u == v:
                    raise NotATree(f"self-loop at vertex {u}")
                if u < 0 or v < 0:
                    raise NotATree(f"negative vertex id in edge ({u}, {v})")
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
            n_edges += 1
        for nbrs in adj.values():
            nbrs.sort()
        self.adj: dict[int, list[int]] = adj
        self._edges: list[Edge] | None = None
        if check:
            if not adj:
                raise NotATree("empty graph")
            for v, nbrs in adj.items():
                for a, b in zip(nbrs, nbrs[1:]):
                    if a == b:
                        raise NotATree(f"duplicate edge ({v}, {a})")
            if n_edges != len(adj) - 1:
                raise NotATree(f"{len(adj)} vertices but {n_edges} edges")
            if len(self._reach(next(iter(adj)))) != len(adj):
                raise NotATree("graph is disconnected")

    def _reach(self, start: int) -> set[int]:
        seen = {start}
        stack = [start]
        adj = self.adj
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    @property
    def vertices(self) -> list[int]:
        return sorted(self.adj)

    @property
    def edges(self) -> list[Edge]:
        """Edges as (min, max) pairs, sorted."""
        if self._edges is None:
            self._edges = sorted((u, v) for u, nbrs in self.adj.items() for v in nbrs if u < v)
        return self._edges

    def __len__(self) -> int:
        return len(self.adj)

    @property
    def n_edges(self) -> int:
        return len(self.adj) - 1

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> list[int]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adj.get(u)
        return nbrs is not None and v in nbrs

    def leaves(self) -> list[int]:
        return sorted(v for v, nbrs in self.adj.items() if len(nbrs) == 1)

    def has_degree_two(self) -> bool:
        return any(len(nbrs) == 2 for nbrs in self.adj.values())

    def incident(self, v: int) -> list[Edge]:
        return [norm_edge(v, w) for w in self.adj[v]]

    def relabel(self, mapping: dict[int, int]) -> Tree:
        return Tree([(mapping[u], mapping[v]) for u, v in self.edges], [mapping[v] for v in self.adj])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tree):
            return NotImplemented
        return set(self.adj) == set(other.adj) and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((frozenset(self.adj), tuple(self.edges)))

    def __repr__(self) -> str:
        if len(self.adj) <= 12:
            return f"Tree({self.edges})"
        return f"Tree(<{len(self.adj)} vertices>)"


def parse_tree(text: str) -> Tree:
    """Parse an edge-list document.

    Blank lines and lines starting with '#' are ignored; every other line
    holds two whitespace-separated decimal vertex ids.
    """
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.isdecimal() for p in parts):
            raise EdgeListSyntaxError(lineno, raw)
        edges.append((int(parts[0]), int(parts[1])))
    return Tree(edges)


def format_tree(t: Tree) -> str:
    lines = [f"{u} {v}" for u, v in t.edges]
    if not lines:
        # a single vertex has no edges to list
        return f"# isolated vertex {t.vertices[0]}\n"
    return "\n".join(lines) + "\n"


def read_tree(path) -> Tree:
    with open(path, encoding="utf-8") as fh:
        return parse_tree(fh.read())


def write_tree(t: Tree, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_tree(t))


@dataclass(frozen=True, eq=False)
class RootedTree:
    """A tree oriented away from `root`.

    `children` lists are sorted by ascending id; `level[root] == 0`.
    """

    tree: Tree
    root: int
    parent: dict[int, int]
    level: dict[int, int]
    children: dict[int, tuple[int, ...]]
    order: tuple[int, ...] = field(repr=False)

    @classmethod
    def from_tree(cls, t: Tree, root: int) -> RootedTree:
        if root not in t.adj:
            raise KeyError(root)
        parent: dict[int, int] = {}
        level = {root: 0}
        children: dict[int, tuple[int, ...]] = {}
        order = [root]
        queue = deque([root])
        while queue:
            x = queue.popleft()
            p = parent.get(x)
            sons = tuple(y for y in t.adj[x] if y != p)
            children[x] = sons
            for y in sons:
                parent[y] = x
                level[y] = level[x] + 1
                order.append(y)
                queue.append(y)
        return cls(t, root, parent, level, children, tuple(order))

    @property
    def vertices(self) -> list[int]:
        return self.tree.vertices

    def __len__(self) -> int:
        return len(self.tree)

    def sons(self, v: int) -> tuple[int, ...]:
        return self.children[v]

    def is_leaf(self, v: int) -> bool:
        return v != self.root and not self.children[v]

    def parent_edge(self, v: int) -> Edge:
        return norm_edge(self.parent[v], v)

    def out_edges(self, v: int) -> list[Edge]:
        return [norm_edge(v, w) for w in self.children[v]]

    def descendants(self, v: int) -> list[int]:
        """Strict descendants of v in BFS order."""
        out = []
        queue = deque(self.children[v])
        while queue:
            x = queue.popleft()
            out.append(x)
            queue.extend(self.children[x])
        return out

    def height(self, v: int) -> int:
        """Length of the longest downward path from v."""
        best = 0
        stack = [(v, 0)]
        while stack:
            x, d = stack.pop()
            if d > best:
                best = d
            for y in self.children[x]:
                stack.append((y, d + 1))
        return best

    def levels(self) -> list[list[int]]:
        by_level: list[list[int]] = []
        for v in self.order:
            lv = self.level[v]
            if lv == len(by_level):
                by_level.append([])
            by_level[lv].append(v)
        return by_level

    def __repr__(self) -> str:
        return f"RootedTree(root={self.root}, {self.tree!r})"


def root_at_leaf(t: Tree, r: int | None = None) -> RootedTree:
    """Orient `t` as an out-branching whose root is the leaf `r`.

    Without `r` the smallest-id leaf is used.
    """
    if len(t) < 2:
        raise NotALeaf("a tree with fewer than two vertices has no leaf")
    if r is None:
        r = min(v for v, nbrs in t.adj.items() if len(nbrs) == 1)
    elif r not in t.adj:
        raise NotALeaf(f"{r} is not a vertex")
    elif t.degree(r) != 1:
        raise NotALeaf(f"vertex {r} has degree {t.degree(r)}")
    return RootedTree.from_tree(t, r)


def subtree_of(rt: RootedTree, v: int) -> RootedTree:
    """The subtree spanned by v's father, v and v's descendants, rooted at the father."""
    if v == rt.root:
        raise IsRoot("the subtree of the root is undefined")
    p = rt.parent[v]
    edges = [(p, v)]
    edges.extend((rt.parent[x], x) for x in rt.descendants(v))
    return RootedTree.from_tree(Tree(edges, check=False), p)


def level_of(rt: RootedTree) -> int:
    """Number of vertex levels; an isolated vertex has level 1."""
    return 1 + max(rt.level.values())


class Shape(Enum):
    FULL = "Full"
    COMPLETE_NOT_FULL = "CompleteNotFull"
    NEITHER_COMPLETE = "NeitherComplete"


def classify_rooted(rt: RootedTree) -> Shape:
    """Full / complete-but-not-full / neither. The root never needs two sons."""
    last = level_of(rt) - 1
    complete = True
    leaves_aligned = True
    for v in rt.order:
        if v == rt.root:
            continue
        n_sons = len(rt.children[v])
        if n_sons == 1:
            complete = False
            break
        if n_sons == 0 and rt.level[v] != last:
            leaves_aligned = False
    if not complete:
        return Shape.NEITHER_COMPLETE
    return Shape.FULL if leaves_aligned else Shape.COMPLETE_NOT_FULL


def is_full(rt: RootedTree) -> bool:
    return classify_rooted(rt) is Shape.FULL


def tree_sum_with_maps(parts: Sequence[RootedTree]) -> tuple[RootedTree, list[dict[int, int]]]:
    """Identify the roots of `parts` into one vertex v and hang v below a fresh root u.

    Returns the sum rooted at u (id 0; v gets id 1) and, per part, the map
    from the part's vertex ids to ids in the sum.
    """
    if not parts:
        raise EmptyList("tree_sum needs at least one part")
    u, v = 0, 1
    next_id = 2
    edges: list[Edge] = [(u, v)]
    maps = []
    for part in parts:
        m = {part.root: v}
        for x in part.order[1:]:
            m[x] = next_id
            next_id += 1
            edges.append((m[part.parent[x]], m[x]))
        maps.append(m)
    return RootedTree.from_tree(Tree(edges), u), maps


def tree_sum(parts: Sequence[RootedTree]) -> RootedTree:
    return tree_sum_with_maps(parts)[0]


@dataclass(frozen=True)
class DegreeDecomposition:
    """Components of the subgraphs spanned by edges at degree-2 vertices (paths)
    and at vertices of degree >= 3 (trees)."""

    t_eq2: list[list[int]]
    t_ge3: list[Tree]


def degree_decompose(t: Tree) -> DegreeDecomposition:
    adj = t.adj
    deg2 = {v for v, nbrs in adj.items() if len(nbrs) == 2}
    paths: list[list[int]] = []
    seen: set[int] = set()
    for start in sorted(deg2):
        if start in seen:
            continue
        # walk both ways until a vertex of degree != 2
        halves = []
        for first in adj[start]:
            prev, cur = start, first
            half = []
            while True:
                half.append(cur)
                if cur not in deg2:
                    break
                seen.add(cur)
                a, b = adj[cur]
                prev, cur = cur, (b if a == prev else a)
            halves.append(half)
        seen.add(start)
        path = halves[0][::-1] + [start] + halves[1]
        if path[-1] < path[0]:
            path.reverse()
        paths.append(path)

    # union-find over the edges incident to vertices of degree >= 3
    big = [v for v, nbrs in adj.items() if len(nbrs) >= 3]
    uf: dict[int, int] = {}

    def find(x: int) -> int:
        root = x
        while uf[root] != root:
            root = uf[root]
        while uf[x] != root:
            uf[x], x = root, uf[x]
        return root

    ge3_edges: set[Edge] = set()
    for v in big:
        for w in adj[v]:
            ge3_edges.add(norm_edge(v, w))
    for a, b in ge3_edges:
        uf.setdefault(a, a)
        uf.setdefault(b, b)
        ra, rb = find(a), find(b)
        if ra != rb:
            uf[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[Edge]] = {}
    for e in sorted(ge3_edges):
        groups.setdefault(find(e[0]), []).append(e)
    comps = [Tree(es) for _, es in sorted(groups.items())]
    return DegreeDecomposition(paths, comps)


def path_edges(path: Sequence[int]) -> list[Edge]:
    return [norm_edge(a, b) for a, b in zip(path, path[1:])]


def iter_bfs_edges(t: Tree, root: int | None = None) -> Iterator[Edge]:
    if root is None:
        root = t.vertices[0]
    rt = RootedTree.from_tree(t, root)
    for x in rt.order[1:]:
        yield norm_edge(rt.parent[x], x)
