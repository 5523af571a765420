"""Linear-time decision of the conflict-free index for trees without degree-2 vertices.

The tree is rooted at a leaf. Repeatedly take the surficial vertex u (the
deepest vertex whose subtree is not full), identify the family of Sub(u),
color it with the family's forced pattern, and cut everything below u's
sons. When the whole remaining tree is full, finish it with one of the
admissible full-tree patterns and verify the assembled coloring.

Each vertex is visited a bounded number of times: surficial candidates are
scanned once in depth order, a member's interior is colored once and then
deleted, and the fullness counters of an ancestor change once per son.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .coloring import BLUE, RED, EdgeColoring
from .decision import DecisionResult, Evidence
from .errors import IncompleteState, PreconditionViolated
from .patterns import STAR_PART, TERMINAL, ColoringPattern, Family, family_of_levels
from .tree_core import Edge, Tree, norm_edge

UNCOLORED = 0


@dataclass(frozen=True)
class TraceStep:
    step: int
    u: int
    family: Family
    action: str  # "color" or "defer"

    def __str__(self) -> str:
        return f"step={self.step} u={self.u} family={self.family} action={self.action}"


class _Mismatch(Exception):
    pass


@dataclass
class SolverState:
    """Mutable working state of one `decide` call, indexed by dense vertex number.

    `color[v]` is the color of the edge from v to its father (0 = uncolored);
    `fixed[v]` marks vertices whose incident edges were colored by a star.
    """

    ids: list[int]
    parent: list[int]
    depth: list[int]
    children: list[list[int]]
    alive: list[bool]
    cut: list[bool]
    full: list[bool]
    height: list[int]
    full_sons: list[int]
    hmin: list[int]
    hmax: list[int]
    color: list[int]
    fixed: list[bool]
    orig_leaf: list[bool]
    root: int = 0
    trace: list[TraceStep] = field(default_factory=list)

    @classmethod
    def build(cls, t: Tree) -> SolverState:
        # dense indices follow BFS order from the smallest-id leaf, so every
        # depth level and every child list occupies a contiguous index range
        tadj = t.adj
        root_id = min(v for v, nbrs in tadj.items() if len(nbrs) == 1)
        n = len(tadj)
        ids = [root_id]
        parent = [-1] * n
        depth = [0] * n
        children: list[list[int]] = [[] for _ in range(n)]
        parent_id = {root_id: None}
        for x, xid in enumerate(ids):
            pid = parent_id[xid]
            kids = children[x]
            dx = depth[x] + 1
            for yid in tadj[xid]:
                if yid != pid:
                    y = len(ids)
                    ids.append(yid)
                    parent_id[yid] = xid
                    parent[y] = x
                    depth[y] = dx
                    kids.append(y)
        root = 0
        order = range(n)
        st = cls(
            ids=ids, parent=parent, depth=depth, children=children,
            alive=[True] * n, cut=[False] * n, full=[False] * n, height=[0] * n,
            full_sons=[0] * n, hmin=[n] * n, hmax=[-1] * n,
            color=[UNCOLORED] * n, fixed=[False] * n,
            orig_leaf=[not children[v] for v in range(n)], root=root,
        )
        full, height, full_sons, hmin, hmax = st.full, st.height, st.full_sons, st.hmin, st.hmax
        for v in reversed(order):
            if v == root:
                continue
            kids = children[v]
            if not kids:
                full[v] = True
            elif full_sons[v] == len(kids) and hmin[v] == hmax[v]:
                full[v] = True
                height[v] = hmin[v] + 1
            else:
                height[v] = -1
            if full[v]:
                p = parent[v]
                full_sons[p] += 1
                h = height[v]
                if h < hmin[p]:
                    hmin[p] = h
                if h > hmax[p]:
                    hmax[p] = h
        return st

    def sons(self, v: int) -> list[int]:
        return [] if self.cut[v] else self.children[v]

    def edge(self, v: int) -> Edge:
        return norm_edge(self.ids[self.parent[v]], self.ids[v])

    def uncolored(self) -> set[Edge]:
        return {self.edge(v) for v in range(len(self.ids)) if v != self.root and self.alive[v] and not self.color[v]}

    def residual_tree(self) -> Tree:
        return Tree([self.edge(v) for v in range(len(self.ids)) if v != self.root and self.alive[v]], check=False)

    # -- coloring with consistency checks --

    def _assign(self, v: int, col: int, pending: dict[int, int]) -> None:
        have = pending.get(v, self.color[v])
        if have and have != col:
            raise _Mismatch(v)
        pending[v] = col

    def _color_part(self, v: int, pattern: ColoringPattern, pending: dict[int, int], with_top: bool) -> None:
        if with_top:
            self._assign(v, RED if pattern.root_color == "R" else BLUE, pending)
        layer = [v]
        for kind in pattern.types:
            nxt = []
            for x in layer:
                sons = self.sons(x)
                if kind.value == "S":
                    if self.fixed[x]:
                        raise _Mismatch(x)
                    for w in sons:
                        self._assign(w, BLUE, pending)
                elif self.fixed[x]:
                    # incident edges already carry a forced D pattern
                    pass
                else:
                    red = next(w for w in sons if self.orig_leaf[w])
                    for w in sons:
                        self._assign(w, RED if w == red else BLUE, pending)
                nxt.extend(sons)
            layer = nxt

    def star_colors(self, u: int, family: Family) -> dict[int, int]:
        """Edge colors (by child vertex) the family's star puts on Sub(u).

        Raises _Mismatch when they contradict colors already present.
        """
        pending: dict[int, int] = {}
        f2 = family is Family.F2
        if not f2:
            self._assign(u, BLUE, pending)
        for v in self.sons(u):
            self._color_part(v, STAR_PART[self.height[v] + 2], pending, with_top=not f2)
        return pending

    def contract(self, u: int) -> None:
        """Delete every descendant of every son of u; u becomes full of height 1."""
        alive, children, cut = self.alive, self.children, self.cut
        for v in self.sons(u):
            if cut[v]:
                continue
            stack = list(children[v])
            while stack:
                x = stack.pop()
                alive[x] = False
                if not cut[x]:
                    stack.extend(children[x])
            cut[v] = True
            self.height[v] = 0
        self.full[u] = True
        self.height[u] = 1
        self._propagate_full(u)

    def _propagate_full(self, v: int) -> None:
        parent, full, height = self.parent, self.full, self.height
        full_sons, hmin, hmax, children = self.full_sons, self.hmin, self.hmax, self.children
        root = self.root
        while True:
            p = parent[v]
            if p == root:
                return
            full_sons[p] += 1
            h = height[v]
            if h < hmin[p]:
                hmin[p] = h
            if h > hmax[p]:
                hmax[p] = h
            if full_sons[p] == len(children[p]) and hmin[p] == hmax[p]:
                full[p] = True
                height[p] = hmin[p] + 1
                v = p
            else:
                return


def contract(state: SolverState, u: int) -> SolverState:
    state.contract(u)
    return state


def _red_blue_valid(st: SolverState) -> bool:
    """Two-color conflict-free check on the original tree, from the color array."""
    n = len(st.ids)
    parent, color, children = st.parent, st.color, st.children
    deg = [len(children[v]) + (v != st.root) for v in range(n)]
    reds = [0] * n
    for v in range(n):
        if v != st.root and color[v] == RED:
            reds[v] += 1
            reds[parent[v]] += 1
    for v in range(n):
        if v == st.root:
            continue
        p = parent[v]
        own = color[v] == RED
        r = reds[v] + reds[p] - own
        total = deg[v] + deg[p] - 1
        if r != 1 and total - r != 1:
            return False
    return True


def assemble_witness(state: SolverState, t: Tree | None = None) -> EdgeColoring:
    """All colors recorded across the steps and the final completion, as a coloring of t."""
    ids, parent, color = state.ids, state.parent, state.color
    out = {}
    for v in range(len(ids)):
        if v == state.root:
            continue
        col = color[v]
        if not col:
            raise IncompleteState(f"edge {state.edge(v)} was never colored")
        out[norm_edge(ids[parent[v]], ids[v])] = col
    if t is not None and len(out) != t.n_edges:
        raise IncompleteState("coloring does not cover the tree")
    return EdgeColoring(out, 2)


def decide(t: Tree, *, trace: bool = False) -> DecisionResult:
    """Index 2 (with a red/blue witness whose red edges are conflict-free) or 3."""
    if len(t) < 3:
        raise PreconditionViolated("need at least 3 vertices")
    if t.has_degree_two():
        raise PreconditionViolated("tree has a degree-2 vertex")
    st = SolverState.build(t)
    steps = st.trace
    n = len(st.ids)

    # candidates by decreasing depth, ascending id inside a depth
    buckets: list[list[int]] = [[] for _ in range(max(st.depth) + 1)]
    for v in range(n):
        buckets[st.depth[v]].append(v)
    ids = st.ids
    for b in buckets:
        b.sort(key=ids.__getitem__)
    alive, full, parent = st.alive, st.full, st.parent
    for d in range(len(buckets) - 1, 0, -1):
        for u in buckets[d]:
            if not alive[u] or full[u]:
                continue
            # every son of u is full here, otherwise a deeper candidate would be non-full
            levels = Counter(st.height[v] + 2 for v in st.sons(u))
            found = family_of_levels(levels)
            if found is None:
                return DecisionResult.three(Evidence.NO_FAMILY, steps)
            family = found[0]
            try:
                pending = st.star_colors(u, family)
            except _Mismatch:
                return DecisionResult.three(Evidence.STAR_MISMATCH, steps)
            color = st.color
            for v, col in pending.items():
                color[v] = col
            action = "defer" if family is Family.F2 else "color"
            if family is not Family.F2:
                st.fixed[u] = True
            if trace:
                steps.append(TraceStep(len(steps) + 1, st.ids[u], family, action))
            st.contract(u)

    # the remaining tree is full below its root
    (s,) = st.children[st.root]
    level = st.height[s] + 2
    for pattern in TERMINAL.get(level, ()):
        try:
            pending = {}
            st._color_part(s, pattern, pending, with_top=True)
        except _Mismatch:
            continue
        saved = {v: st.color[v] for v in pending}
        for v, col in pending.items():
            st.color[v] = col
        if _red_blue_valid(st):
            return DecisionResult.two(assemble_witness(st, t), steps)
        for v, col in saved.items():
            st.color[v] = col
    return DecisionResult.three(Evidence.FINAL_VERIFY_FAIL, steps)
