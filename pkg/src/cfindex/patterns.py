"""Coloring patterns of full subtrees and the four surficial families.

Conventions: red (1) is the conflict-free color of the host tree. A member
of a family is Sub(u) for a surficial vertex u, stored as a RootedTree whose
root is u's father and whose only root son is u.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum

from .coloring import BLUE, RED, EdgeColoring, VertexType, vertex_type
from .errors import MixedLevel, PartialColoring, PreconditionViolated, ShapeMismatch, WholeTreeFull
from .tree_core import Edge, RootedTree, level_of, norm_edge, subtree_of

S, D = VertexType.S, VertexType.D


@dataclass(frozen=True)
class ColoringPattern:
    root_color: str  # "R" or "B"
    types: tuple[VertexType, ...] = ()

    def __str__(self) -> str:
        return ",".join([self.root_color] + [t.value for t in self.types])

    @property
    def level(self) -> int:
        return len(self.types) + 2


PAT_B = ColoringPattern("B")
PAT_R = ColoringPattern("R")
R1 = ColoringPattern("B", (D,))
R2 = ColoringPattern("R", (S,))
R3 = ColoringPattern("R", (S, S, D))
R4 = ColoringPattern("B", (S, D))
ADMISSIBLE = frozenset({PAT_B, PAT_R, R1, R2, R3, R4})

# pattern forced on a son's full subtree inside a starred member, by level
STAR_PART = {2: PAT_B, 3: R2, 4: R4, 5: R3}
# completions tried, in order, when the whole remaining tree is full
TERMINAL = {3: (R1, R2), 4: (R4,), 5: (R3,)}


class Family(Enum):
    F1 = 1
    F2 = 2
    F3 = 3
    F4 = 4

    def __str__(self) -> str:
        return self.name


def family_of_levels(levels: Counter) -> tuple[Family, dict[str, int]] | None:
    """Family given the multiset of son-subtree levels, with its multiplicities."""
    c2, c3, c4, c5 = levels[2], levels[3], levels[4], levels[5]
    if sum(levels.values()) != c2 + c3 + c4 + c5:
        return None
    if c5 == 1 and c3 == 0 and c2 + c4 > 0:
        return Family.F4, {"k6": c2, "k7": c4}
    if c5 == 0 and c3 == 1:
        if c4 == 0 and c2 > 0:
            return Family.F1, {"k1": c2}
        if c4 > 0:
            return Family.F3, {"k4": c2, "k5": c4}
        return None
    if c5 == 0 and c3 == 0 and c2 > 0 and c4 > 0:
        return Family.F2, {"k2": c2, "k3": c4}
    return None


@dataclass(frozen=True)
class FamilyDescriptor:
    family: Family
    multiplicities: dict[str, int]
    member_root: int
    member: RootedTree = field(repr=False, compare=False)

    def __str__(self) -> str:
        ks = " ".join(f"{k}={v}" for k, v in sorted(self.multiplicities.items()))
        return f"{self.family} u={self.member_root} {ks}"


class F2Variant(Enum):
    F2_1 = "F2_1"  # u is a D-vertex
    F2_2 = "F2_2"  # u is an S-vertex
    UNRESOLVED = "Unresolved"


@dataclass(frozen=True)
class StarColoring:
    descriptor: FamilyDescriptor
    assignment: EdgeColoring
    variant: F2Variant | None = None


# --- fullness ---------------------------------------------------------------

def _fullness(rt: RootedTree) -> tuple[dict[int, bool], dict[int, int]]:
    """full[v]: Sub(v) is a full tree; height[v]: longest downward path from v."""
    full: dict[int, bool] = {}
    height: dict[int, int] = {}
    for v in reversed(rt.order):
        sons = rt.children[v]
        if not sons:
            full[v], height[v] = True, 0
            continue
        hs = {height[w] for w in sons}
        height[v] = max(hs) + 1
        full[v] = len(sons) >= 2 and len(hs) == 1 and all(full[w] for w in sons)
    return full, height


def coloring_pattern(full: RootedTree, c: EdgeColoring) -> ColoringPattern:
    """Root-edge color and per-level S/D types of a full subtree under a red-CF coloring."""
    root = full.root
    (son,) = full.children[root]
    top = c.get((root, son))
    if top is None:
        raise PartialColoring("root edge is uncolored")
    types = []
    for lv in full.levels()[1:]:
        inner = [v for v in lv if full.children[v]]
        if not inner:
            break
        kinds = {vertex_type(full, c, v) for v in inner}
        if len(kinds) > 1:
            raise MixedLevel(f"level {full.level[inner[0]]} mixes S and D vertices")
        types.append(kinds.pop())
    return ColoringPattern("R" if top == RED else "B", tuple(types))


def maximal_full_subtrees(rt: RootedTree) -> list[tuple[int, RootedTree]]:
    full, _ = _fullness(rt)
    out = []
    for v in rt.order:
        if v == rt.root or rt.parent[v] == rt.root:
            continue
        if full[v] and not full[rt.parent[v]]:
            out.append((v, subtree_of(rt, v)))
    return out


def index_set(rt: RootedTree) -> set[int]:
    """Fathers of the roots of maximal full subtrees."""
    return {rt.parent[v] for v, _ in maximal_full_subtrees(rt)}


def find_surficial_vertex(rt: RootedTree) -> int:
    """A vertex of the index set at the largest level (smallest id on ties).

    This is the deepest non-root vertex whose subtree is not full: such a
    vertex has only full sons, and every member of the index set is non-full.
    """
    full, _ = _fullness(rt)
    best = None
    for v in rt.order:
        if v != rt.root and not full[v]:
            key = (-rt.level[v], v)
            if best is None or key < best:
                best = key
    if best is None:
        raise WholeTreeFull("every subtree below the root is full")
    u = best[1]
    assert all(full[w] for w in rt.children[u])
    return u


def ascent_candidate(rt: RootedTree) -> int:
    """Climb from the smallest-id deepest leaf while the subtree stays full.

    The vertex reached can have a non-full son when another branch holds a
    shallower non-full subtree, so it is not always surficial; see
    find_surficial_vertex.
    """
    full, _ = _fullness(rt)
    deepest = max(rt.level.values())
    x = min(v for v in rt.order if rt.level[v] == deepest)
    u = rt.parent[x]
    while u != rt.root and full[u]:
        u = rt.parent[u]
    if u == rt.root:
        raise WholeTreeFull("every subtree below the root is full")
    return u


# --- families -----------------------------------------------------------------

def classify_family(sub: RootedTree) -> FamilyDescriptor | None:
    """Family of a member Sub(u) (root = father of u), or None if it is in none.

    A full Sub(u) (all sons of one level) lies in no family and gives None.
    """
    (u,) = sub.children[sub.root]
    full, height = _fullness(sub)
    if not all(full[v] for v in sub.children[u]):
        raise PreconditionViolated("some son of u has a non-full subtree")
    levels = Counter(height[v] + 2 for v in sub.children[u])
    found = family_of_levels(levels)
    if found is None:
        return None
    fam, ks = found
    return FamilyDescriptor(fam, ks, u, sub)


def _color_part(rt: RootedTree, v: int, pattern: ColoringPattern, out: dict[Edge, int], with_top: bool = True) -> None:
    """Color Sub(v) by `pattern`; D-vertices send red to their smallest son."""
    if with_top:
        out[rt.parent_edge(v)] = RED if pattern.root_color == "R" else BLUE
    layer = [v]
    for kind in pattern.types:
        nxt = []
        for x in layer:
            sons = rt.children[x]
            for i, w in enumerate(sons):
                out[norm_edge(x, w)] = RED if (kind is D and i == 0) else BLUE
            nxt.extend(sons)
        layer = nxt


def canonical_star_coloring(d: FamilyDescriptor) -> StarColoring:
    """The forced coloring of a member; for F2 the edges at u stay uncolored."""
    sub, u = d.member, d.member_root
    _, height = _fullness(sub)
    out: dict[Edge, int] = {}
    f2 = d.family is Family.F2
    if not f2:
        out[norm_edge(sub.root, u)] = BLUE
    for v in sub.children[u]:
        _color_part(sub, v, STAR_PART[height[v] + 2], out, with_top=not f2)
    return StarColoring(d, EdgeColoring(out, 2), F2Variant.UNRESOLVED if f2 else None)


def extend_f2(star: StarColoring, variant: F2Variant) -> EdgeColoring:
    """Complete an F2 star: u a D-vertex (red to its smallest leaf son) or an S-vertex."""
    d = star.descriptor
    sub, u = d.member, d.member_root
    out = dict(star.assignment.assignment)
    leaf_sons = [v for v in sub.children[u] if not sub.children[v]]
    red_son = leaf_sons[0] if variant is F2Variant.F2_1 else None
    out[norm_edge(sub.root, u)] = BLUE if variant is F2Variant.F2_1 else RED
    for v in sub.children[u]:
        out[norm_edge(u, v)] = RED if v == red_son else BLUE
    return EdgeColoring(out, 2)


# --- color-consistent rooted isomorphism ------------------------------------------

def _shape_codes(rt: RootedTree) -> dict[int, str]:
    code: dict[int, str] = {}
    for v in reversed(rt.order):
        code[v] = "(" + "".join(sorted(code[w] for w in rt.children[v])) + ")"
    return code


def matches_star(observed: RootedTree, colors: EdgeColoring, star: StarColoring) -> bool:
    """Is there a rooted isomorphism onto the star's member under which every
    edge colored in both agrees? Edges the star leaves open accept anything."""
    target = star.descriptor.member
    oc, tc = _shape_codes(observed), _shape_codes(target)
    if oc[observed.root] != tc[target.root]:
        raise ShapeMismatch("observed member and star member differ in shape")
    s_col = star.assignment.assignment
    o_col = colors.assignment
    memo: dict[tuple[int, int], bool] = {}

    def agree(e_obs: Edge, e_star: Edge) -> bool:
        a, b = o_col.get(e_obs), s_col.get(e_star)
        return a is None or b is None or a == b

    def compat(x: int, y: int) -> bool:
        key = (x, y)
        if key in memo:
            return memo[key]
        xs, ys = observed.children[x], target.children[y]
        ok = True
        # Kuhn's augmenting paths between equal-shaped sons
        match_of: dict[int, int] = {}

        def can(i: int, seen: set[int]) -> bool:
            for j in ys:
                if j in seen or oc[i] != tc[j]:
                    continue
                if not (agree(norm_edge(x, i), norm_edge(y, j)) and compat(i, j)):
                    continue
                seen.add(j)
                if j not in match_of or can(match_of[j], seen):
                    match_of[j] = i
                    return True
            return False

        for i in xs:
            if not can(i, set()):
                ok = False
                break
        memo[key] = ok
        return ok

    (o_u,) = observed.children[observed.root]
    (t_u,) = target.children[target.root]
    return agree(norm_edge(observed.root, o_u), norm_edge(target.root, t_u)) and compat(o_u, t_u)


def describe(d: FamilyDescriptor, pattern: ColoringPattern | None = None) -> str:
    """One-line text dump: family, multiplicities and optionally a pattern."""
    s = str(d)
    if pattern is not None:
        s += f" pattern={pattern}"
    return s


__all__ = [
    "ADMISSIBLE", "ColoringPattern", "Family", "FamilyDescriptor", "F2Variant", "StarColoring",
    "R1", "R2", "R3", "R4", "PAT_B", "PAT_R", "STAR_PART", "TERMINAL",
    "ascent_candidate", "canonical_star_coloring", "classify_family", "coloring_pattern",
    "describe", "extend_f2", "family_of_levels", "find_surficial_vertex", "index_set",
    "level_of", "matches_star", "maximal_full_subtrees",
]
