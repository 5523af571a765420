import random

import pytest
from hypothesis import given, settings

from cfindex.coloring import RED, verify_conflict_free
from cfindex.decision import Evidence
from cfindex.errors import IncompleteState, PreconditionViolated
from cfindex.generators import gen_family, gen_full_tree, gen_random_no_deg2
from cfindex.linear_solver import SolverState, assemble_witness, contract, decide
from cfindex.matching_dp import decide_via_matching, is_dominating_induced
from cfindex.oracle import brute_force_index, enumerate_trees
from cfindex.patterns import Family
from cfindex.sweeps import witness_problem
from cfindex.coloring import red_matching
from cfindex.tree_core import Tree

from conftest import double_star, no_deg2_trees, path, star


def test_star():
    res = decide(star(3))
    assert res.index == 2 and len(res.witness.edges_of(RED)) == 1
    assert verify_conflict_free(star(3), res.witness)


def test_double_star():
    res = decide(double_star())
    assert res.is_two and res.witness.edges_of(RED) == {(0, 1)}


def test_preconditions():
    with pytest.raises(PreconditionViolated):
        decide(path(4))
    with pytest.raises(PreconditionViolated):
        decide(path(2))


def test_three_has_evidence():
    t = gen_family(Family.F1, {"k1": 1}).tree
    t3 = Tree([(0, 1), (1, 2), (1, 3), (2, 4), (2, 5), (3, 6), (3, 7)])
    res = decide(t3)
    assert res.index == 3 and res.evidence is not None and res.witness is None
    assert decide(t).is_two


def test_evidence_tags_all_occur():
    seen = set()
    for n in range(4, 15):
        for t in enumerate_trees(n, no_deg2=True):
            res = decide(t)
            if not res.is_two:
                seen.add(res.evidence)
    assert {Evidence.NO_FAMILY, Evidence.STAR_MISMATCH} <= seen


def test_tall_full_tree_fails_at_completion():
    t = gen_full_tree(6).tree
    res = decide(t)
    assert res.evidence is Evidence.FINAL_VERIFY_FAIL
    assert not decide_via_matching(t).is_two


def test_trace_lines():
    t = gen_family(Family.F2, {"k2": 1, "k3": 1}).tree
    res = decide(t, trace=True)
    lines = [str(s) for s in res.trace]
    assert lines and all(line.startswith("step=") for line in lines)
    assert any("family=F2 action=defer" in line for line in lines)
    assert [s.step for s in res.trace] == list(range(1, len(lines) + 1))


def test_agreement_up_to_12():
    for n in range(3, 13):
        for t in enumerate_trees(n, no_deg2=True):
            res = decide(t)
            assert res.index == brute_force_index(t)[0] == decide_via_matching(t).index
            if res.is_two:
                assert witness_problem(t, res.witness) is None


@settings(max_examples=150, deadline=None)
@given(no_deg2_trees(max_n=300))
def test_agrees_with_matching_on_random_trees(t):
    res = decide(t)
    assert res.index == decide_via_matching(t).index
    if res.is_two:
        assert verify_conflict_free(t, res.witness)
        assert is_dominating_induced(t, red_matching(t, res.witness))


def test_colorable_generator_always_two():
    for seed in range(300):
        t = gen_random_no_deg2(random.Random(seed).randint(4, 400), seed, colorable=True)
        assert decide(t).is_two


def test_relabeling_does_not_change_answer():
    rng = random.Random(3)
    for seed in range(100):
        t = gen_random_no_deg2(80, seed)
        ids = list(range(1000))
        rng.shuffle(ids)
        assert decide(t).index == decide(t.relabel(dict(enumerate(ids)))).index


def test_contract_removes_grandchildren():
    t = Tree([(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)])
    st = SolverState.build(t)
    before = sum(st.alive)
    contract(st, 1)
    assert sum(st.alive) == before - 2
    assert st.full[1] and st.height[1] == 1
    contract(st, 1)
    assert sum(st.alive) == before - 2


def test_assemble_witness_requires_all_colors():
    st = SolverState.build(star(3))
    with pytest.raises(IncompleteState):
        assemble_witness(st)


def test_uncolored_set_shrinks():
    t = gen_family(Family.F1, {"k1": 1}).tree
    st = SolverState.build(t)
    assert st.uncolored() == set(t.edges)
    assert st.residual_tree() == t


@pytest.mark.slow
def test_large_colorable_tree():
    t = gen_random_no_deg2(200_000, 5, colorable=True)
    res = decide(t)
    assert res.is_two and verify_conflict_free(t, res.witness)
