import pytest
from hypothesis import given, settings

from cfindex.coloring import Matching, verify_conflict_free
from cfindex.errors import PreconditionViolated, UnknownEdge
from cfindex.matching_dp import decide_via_matching, find_dim, is_dominating_induced
from cfindex.oracle import brute_force_dim_exists, brute_force_index, enumerate_trees

from conftest import double_star, no_deg2_trees, path, star, trees


def test_is_dim_examples():
    assert is_dominating_induced(star(3), Matching.of([(0, 1)]))
    assert is_dominating_induced(double_star(), Matching.of([(0, 1)]))
    assert not is_dominating_induced(path(4), Matching.of([(0, 1), (2, 3)]))


def test_is_dim_rejects_non_matching_and_unknown_edge():
    assert not is_dominating_induced(star(3), Matching.of([(0, 1), (0, 2)]))
    with pytest.raises(UnknownEdge):
        is_dominating_induced(star(3), Matching.of([(1, 2)]))


def test_find_dim_examples():
    m = find_dim(star(3))
    assert len(m) == 1 and is_dominating_induced(star(3), m)
    m6 = find_dim(path(6))
    assert m6.edges in ({(0, 1), (3, 4)}, {(1, 2), (4, 5)})
    assert len(find_dim(path(3))) == 1


def test_decide_examples():
    assert decide_via_matching(star(3)).index == 2
    assert decide_via_matching(double_star()).index == 2
    with pytest.raises(PreconditionViolated):
        decide_via_matching(path(5))
    with pytest.raises(PreconditionViolated):
        decide_via_matching(path(2))


def test_find_dim_agrees_with_subset_search():
    for n in range(2, 12):
        for t in enumerate_trees(n):
            m = find_dim(t)
            assert (m is not None) == brute_force_dim_exists(t), t
            if m is not None:
                assert is_dominating_induced(t, m)


@pytest.mark.slow
def test_find_dim_agrees_with_subset_search_13_14():
    for n in (13, 14):
        for t in enumerate_trees(n):
            assert (find_dim(t) is not None) == brute_force_dim_exists(t)


def test_decide_agrees_with_oracle():
    for n in range(3, 13):
        for t in enumerate_trees(n, no_deg2=True):
            res = decide_via_matching(t)
            assert res.index == brute_force_index(t)[0]
            if res.is_two:
                assert verify_conflict_free(t, res.witness)


@settings(max_examples=100, deadline=None)
@given(no_deg2_trees(max_n=200))
def test_witness_always_valid(t):
    res = decide_via_matching(t)
    if res.is_two:
        assert verify_conflict_free(t, res.witness)


@settings(max_examples=100)
@given(trees(max_n=40))
def test_found_matching_is_dim(t):
    m = find_dim(t)
    if m is not None:
        assert m.is_matching() and is_dominating_induced(t, m)
