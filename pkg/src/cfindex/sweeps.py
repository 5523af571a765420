"""Exhaustive property sweeps over small trees, shared by the CLI and the tests."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .coloring import canonicalize, red_matching, tree_conflict_free_color, unique_color_of_vertex, verify_conflict_free
from .errors import MixedLevel
from .linear_solver import decide
from .matching_dp import decide_via_matching, is_dominating_induced
from .oracle import brute_force_index, enumerate_cf_2_colorings, enumerate_trees
from .patterns import ADMISSIBLE, coloring_pattern, maximal_full_subtrees
from .tree_core import Tree, level_of, root_at_leaf


@dataclass
class SweepReport:
    check: str
    trees: int = 0
    items: int = 0  # colorings or subtrees inspected, depending on the check
    failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.failure is None

    def __str__(self) -> str:
        head = f"check={self.check} trees={self.trees} items={self.items}"
        return head + (" OK" if self.ok else f" FAIL {self.failure}")


def _trees(sizes: Iterable[int], no_deg2: bool) -> Iterable[Tree]:
    for n in sizes:
        yield from enumerate_trees(n, no_deg2=no_deg2)


def witness_problem(t: Tree, witness) -> str | None:
    """Why a claimed red/blue witness is unsound, or None."""
    check = verify_conflict_free(t, witness)
    if not check:
        return f"witness not conflict-free at {check.witness}"
    if not is_dominating_induced(t, red_matching(t, witness)):
        return "red edges are not a dominating induced matching"
    try:
        tree_conflict_free_color(t, witness)
    except ValueError as exc:
        return f"no tree-wide conflict-free color: {exc}"
    return None


def check_agreement(sizes: Iterable[int], witnesses: bool = True) -> SweepReport:
    """Linear solver, matching DP and oracle agree on every tree without degree-2 vertices."""
    rep = SweepReport("agreement")
    for t in _trees(sizes, True):
        if len(t) < 3:
            continue
        rep.trees += 1
        lin, dp = decide(t), decide_via_matching(t)
        k, oracle_witness = brute_force_index(t)
        if not lin.index == dp.index == k:
            rep.failure = f"{t!r}: linear={lin.index} matching={dp.index} oracle={k}"
            return rep
        if witnesses:
            for w in (lin.witness, dp.witness, oracle_witness if k == 2 else None):
                if w is not None:
                    rep.items += 1
                    why = witness_problem(t, w)
                    if why:
                        rep.failure = f"{t!r}: {why}"
                        return rep
    return rep


def check_full_subtree_patterns(sizes: Iterable[int]) -> SweepReport:
    """Maximal full subtrees of 2-colorable complete trees have level 2..5 and an admissible pattern.

    Complete trees are the trees without degree-2 vertices rooted at each of their leaves.
    """
    rep = SweepReport("lemma32")
    for t in _trees(sizes, True):
        if len(t) < 3:
            continue
        colorings = [canonicalize(t, c) for c in enumerate_cf_2_colorings(t)]
        if not colorings:
            continue
        rep.trees += 1
        for r in t.leaves():
            rt = root_at_leaf(t, r)
            for v, sub in maximal_full_subtrees(rt):
                lv = level_of(sub)
                if not 2 <= lv <= 5:
                    rep.failure = f"{t!r} root={r}: maximal full subtree at {v} has level {lv}"
                    return rep
                for c in colorings:
                    rep.items += 1
                    try:
                        pat = coloring_pattern(sub, c)
                    except MixedLevel as exc:
                        rep.failure = f"{t!r} root={r} v={v}: {exc}"
                        return rep
                    if pat not in ADMISSIBLE:
                        rep.failure = f"{t!r} root={r} v={v}: pattern {pat}"
                        return rep
    return rep


def check_unique_colors(sizes: Iterable[int], no_deg2: bool = True) -> SweepReport:
    """At every inner vertex E(v) is monochromatic or has a unique color, and a
    vertex with a pendant edge always has a unique color."""
    rep = SweepReport("obs21")
    for t in _trees(sizes, no_deg2):
        if len(t) < 3:
            continue
        rep.trees += 1
        for c in enumerate_cf_2_colorings(t):
            rep.items += 1
            for v in t.vertices:
                inc = t.incident(v)
                if len(inc) < 2:
                    continue
                mono = len({c[e] for e in inc}) == 1
                uniq = unique_color_of_vertex(t, c, v)
                pendant = any(t.degree(w) == 1 for w in t.neighbors(v))
                if uniq is None and (not mono or pendant):
                    rep.failure = f"{t!r} vertex {v}: {'pendant edge without' if mono else 'no'} unique color"
                    return rep
    return rep


CHECKS: dict[str, Callable[..., SweepReport]] = {
    "agreement": check_agreement,
    "lemma32": check_full_subtree_patterns,
    "obs21": check_unique_colors,
}
