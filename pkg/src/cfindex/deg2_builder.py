"""Constructive red/blue colorings for trees with long degree-2 paths.

If every component of the degree->=3 part is 2-colorable and every path of
degree-2 vertices (with its two end vertices) has at least five vertices,
two colors suffice. `build_coloring` produces such a coloring by cutting one
path, coloring both sides recursively and refilling the path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .coloring import BLUE, RED, EdgeColoring, verify_conflict_free
from .errors import HypothesesFail, Infeasible, NoColoringWithin, OracleTooLarge, TooLarge
from .linear_solver import decide
from .oracle import brute_force_index
from .tree_core import Edge, Tree, degree_decompose, norm_edge

MIN_PATH_VERTICES = 5


@dataclass(frozen=True)
class BuildStep:
    path: tuple[int, ...]
    case: int  # 0 when a side is a single edge, else 1, 2 or 3
    parity: str  # "odd" / "even" number of path vertices

    def __str__(self) -> str:
        return f"path={self.path[0]}..{self.path[-1]} t={len(self.path)} case={self.case} parity={self.parity}"


def _component_colorable(comp: Tree) -> bool:
    if len(comp) == 2:
        return True
    if not comp.has_degree_two():
        return decide(comp).is_two
    try:
        return brute_force_index(comp, max_k=2)[0] <= 2
    except TooLarge as exc:
        raise OracleTooLarge(str(exc)) from exc
    except NoColoringWithin:
        return False


AUTO = "auto"


def hypotheses_hold(t: Tree, component_colorings: Mapping[int, EdgeColoring] | str | None = AUTO) -> bool:
    """Check the long-path and colorable-part conditions.

    `component_colorings` may give a coloring for component i of the
    degree->=3 part (in degree_decompose order); other components are decided
    automatically, by the linear solver when they have no degree-2 vertex and
    by the oracle otherwise.
    """
    dec = degree_decompose(t)
    if any(len(p) < MIN_PATH_VERTICES for p in dec.t_eq2):
        return False
    given = component_colorings if isinstance(component_colorings, Mapping) else {}
    for i, comp in enumerate(dec.t_ge3):
        if i in given:
            c = given[i]
            if len(set(c.assignment.values())) > 2 or not c.is_total(comp) or not verify_conflict_free(comp, c):
                return False
        elif not _component_colorable(comp):
            return False
    return True


def alternate_path_coloring(path: Sequence[int], first_color: int = RED, parity_target: int | None = None) -> EdgeColoring:
    """Color the path's edges alternately starting from `first_color`.

    With `parity_target` the final edge must get that color; parity decides
    whether that is possible.
    """
    n_edges = len(path) - 1
    if n_edges < 1:
        raise Infeasible("path has no edges")
    other = BLUE if first_color == RED else RED
    colors = [first_color if i % 2 == 0 else other for i in range(n_edges)]
    if parity_target is not None and colors[-1] != parity_target:
        raise Infeasible(f"{n_edges} alternating edges cannot start with {first_color} and end with {parity_target}")
    return EdgeColoring({norm_edge(a, b): c for a, b, c in zip(path, path[1:], colors)}, 2)


def _alternate(first: int, count: int) -> list[int]:
    other = BLUE if first == RED else RED
    return [first if i % 2 == 0 else other for i in range(count)]


def _is_cf_edge(side: Tree, c: EdgeColoring, end: int, e: Edge) -> bool:
    """Is e's color used exactly once among the edges at `end` (e's non-leaf end in side)?"""
    own = c[e]
    return sum(1 for f in side.incident(end) if c[f] == own) == 1


def _side(t: Tree, start: int, banned: set[int]) -> Tree:
    seen = {start}
    stack = [start]
    edges = []
    while stack:
        x = stack.pop()
        for y in t.adj[x]:
            if y in banned:
                continue
            if y not in seen:
                seen.add(y)
                stack.append(y)
                edges.append((x, y))
    return Tree(edges, check=False)


def _fill(t: int, case: int) -> tuple[int, int, list[int]]:
    """(color of x1x2, color of x_{t-1}x_t, colors of x2x3 .. x_{t-2}x_{t-1}) for a case."""
    odd = t % 2 == 1
    inner = t - 3
    if case == 1:
        if not odd:
            cols = _alternate(RED, t - 1)
            return RED, RED, cols[1:-1]
        # alternate up to x_{t-3}x_{t-2}, then x_{t-2}x_{t-1} blue
        cols = _alternate(RED, t - 3)
        return RED, RED, cols[1:] + [BLUE]
    if case == 2:
        if odd:
            cols = _alternate(RED, t - 3)
            return RED, RED, cols[1:] + [RED]
        # x2x3 blue, the inner path from x3x4 alternates starting blue, x_{t-2}x_{t-1} red
        return RED, RED, [BLUE] + _alternate(BLUE, inner - 2) + [RED]
    if odd:
        return RED, BLUE, _alternate(RED, inner)
    return BLUE, BLUE, _alternate(BLUE, inner)


def _build(t: Tree, steps: list[BuildStep]) -> EdgeColoring:
    if len(t) == 2:
        return EdgeColoring({t.edges[0]: RED}, 2)
    dec = degree_decompose(t)
    if not dec.t_eq2:
        res = decide(t)
        if not res.is_two:
            raise HypothesesFail(f"part {t!r} needs three colors")
        return res.witness
    path = min(dec.t_eq2, key=min)
    tv = len(path)
    if tv < MIN_PATH_VERTICES:
        raise HypothesesFail(f"degree-2 path {path} has only {tv} vertices")
    middle = set(path[2:-2])
    t1 = _side(t, path[0], middle)
    t2 = _side(t, path[-1], middle)
    c1, c2 = _build(t1, steps), _build(t2, steps)

    e1 = norm_edge(path[0], path[1])
    e2 = norm_edge(path[-2], path[-1])
    cf1 = _is_cf_edge(t1, c1, path[0], e1)
    cf2 = _is_cf_edge(t2, c2, path[-1], e2)
    if not cf1 and cf2:
        path = path[::-1]
        t1, t2, c1, c2, e1, e2, cf1, cf2 = t2, t1, c2, c1, e2, e1, cf2, cf1
    case = 1 if cf1 and cf2 else 2 if cf1 else 3
    if len(t1) == 2 or len(t2) == 2:
        steps.append(BuildStep(tuple(path), 0, "odd" if tv % 2 else "even"))
    else:
        steps.append(BuildStep(tuple(path), case, "odd" if tv % 2 else "even"))

    want1, want2, inner = _fill(tv, case)
    if c1[e1] != want1:
        c1 = c1.swapped()
    if c2[e2] != want2:
        c2 = c2.swapped()
    out = dict(c1.assignment)
    out.update(c2.assignment)
    for a, b, col in zip(path[1:], path[2:-1], inner):
        out[norm_edge(a, b)] = col
    result = EdgeColoring(out, 2)
    check = verify_conflict_free(t, result)
    if not check:
        raise AssertionError(f"path refill failed at edge {check.witness} (case {case}, t={tv})")
    return result


def build_coloring(t: Tree, trace: list[BuildStep] | None = None) -> EdgeColoring:
    """A conflict-free red/blue coloring of t; HypothesesFail if the path
    conditions or a part's colorability fail along the way."""
    if len(t) == 1:
        return EdgeColoring({}, 2)
    if any(len(p) < MIN_PATH_VERTICES for p in degree_decompose(t).t_eq2):
        raise HypothesesFail("a degree-2 path has fewer than five vertices")
    steps = trace if trace is not None else []
    return _build(t, steps)
