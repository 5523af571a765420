import itertools

import pytest
from hypothesis import given, strategies as st

from cfindex.coloring import (
    BLUE,
    RED,
    EdgeColoring,
    Matching,
    VertexType,
    canonicalize,
    closed_neighborhood,
    conflict_free_colors_of_edge,
    format_coloring,
    matching_to_coloring,
    parse_coloring,
    read_coloring,
    red_matching,
    tree_conflict_free_color,
    unique_color_of_vertex,
    vertex_type,
    verify_conflict_free,
    write_coloring,
)
from cfindex.errors import LeafVertex, NotConflictFree, PartialColoring, PreconditionViolated, UnknownEdge
from cfindex.matching_dp import is_dominating_induced
from cfindex.oracle import enumerate_cf_2_colorings, enumerate_trees
from cfindex.tree_core import Tree, root_at_leaf

from conftest import double_star, path, star, trees


def star_one_red(k=3):
    t = star(k)
    return t, EdgeColoring.of({(0, 1): RED, **{(0, i): BLUE for i in range(2, k + 1)}})


def test_closed_neighborhood():
    assert closed_neighborhood(path(2), (0, 1)) == {(0, 1)}
    assert closed_neighborhood(path(3), (0, 1)) == {(0, 1), (1, 2)}
    assert closed_neighborhood(star(4), (0, 2)) == set(star(4).edges)


def test_closed_neighborhood_unknown_edge():
    with pytest.raises(UnknownEdge):
        closed_neighborhood(path(3), (0, 2))


def test_cf_colors_of_edge():
    p = path(3)
    assert conflict_free_colors_of_edge(p, EdgeColoring.of({(0, 1): 1, (1, 2): 2}), (0, 1)) == {1, 2}
    assert conflict_free_colors_of_edge(p, EdgeColoring.of({(0, 1): 1, (1, 2): 1}), (1, 2)) == set()
    t, c = star_one_red()
    assert all(conflict_free_colors_of_edge(t, c, e) == {RED} for e in t.edges)


def test_cf_colors_partial():
    with pytest.raises(PartialColoring):
        conflict_free_colors_of_edge(path(3), EdgeColoring.of({(0, 1): 1}), (0, 1))


def test_verify_examples():
    assert verify_conflict_free(path(2), EdgeColoring.of({(0, 1): 1}))
    bad = verify_conflict_free(path(3), EdgeColoring.of({(0, 1): 1, (1, 2): 1}))
    assert not bad and bad.witness in {(0, 1), (1, 2)}
    assert str(bad).startswith("invalid")
    assert verify_conflict_free(*star_one_red())


def test_verify_partial():
    with pytest.raises(PartialColoring):
        verify_conflict_free(path(3), EdgeColoring.of({(0, 1): 1}))


def _brute_valid(t, c):
    for e in t.edges:
        counts = {}
        for f in t.edges:
            if set(f) & set(e):
                counts[c[f]] = counts.get(c[f], 0) + 1
        if 1 not in counts.values():
            return False
    return True


@given(trees(max_n=9), st.data())
def test_verify_matches_definition(t, data):
    cols = data.draw(st.lists(st.integers(1, 3), min_size=t.n_edges, max_size=t.n_edges))
    c = EdgeColoring(dict(zip(t.edges, cols)), 3)
    assert bool(verify_conflict_free(t, c)) == _brute_valid(t, c)


@given(trees(max_n=9), st.data())
def test_verify_palette_invariant(t, data):
    cols = data.draw(st.lists(st.integers(1, 3), min_size=t.n_edges, max_size=t.n_edges))
    perm = dict(zip((1, 2, 3), data.draw(st.permutations([1, 2, 3]))))
    c = EdgeColoring(dict(zip(t.edges, cols)), 3)
    assert bool(verify_conflict_free(t, c)) == bool(verify_conflict_free(t, c.permuted(perm)))


def test_tree_cf_color_examples():
    assert tree_conflict_free_color(*star_one_red()) == RED
    ds = double_star()
    c = EdgeColoring.of({e: RED if e == (0, 1) else BLUE for e in ds.edges})
    assert tree_conflict_free_color(ds, c) == RED
    with pytest.raises(PreconditionViolated):
        tree_conflict_free_color(path(3), EdgeColoring.of({(0, 1): 1, (1, 2): 2}))


def test_tree_cf_color_rejects_invalid():
    t = star(3)
    with pytest.raises(NotConflictFree):
        tree_conflict_free_color(t, EdgeColoring.of({e: BLUE for e in t.edges}))


def test_unique_color_of_vertex():
    t, c = star_one_red()
    assert unique_color_of_vertex(t, c, 0) == (BLUE, (0, 1))
    mono = EdgeColoring.of({e: BLUE for e in t.edges})
    assert unique_color_of_vertex(t, mono, 0) is None
    assert unique_color_of_vertex(t, c, 2) is None


def test_vertex_types(k13):
    rt = root_at_leaf(k13)  # root 1, center 0 with out-edges to 2, 3
    blue = EdgeColoring.of({(0, 1): RED, (0, 2): BLUE, (0, 3): BLUE})
    assert vertex_type(rt, blue, 0) is VertexType.S
    red = EdgeColoring.of({(0, 1): BLUE, (0, 2): RED, (0, 3): BLUE})
    assert vertex_type(rt, red, 0) is VertexType.D
    with pytest.raises(LeafVertex):
        vertex_type(rt, red, 2)


def test_red_matching_examples():
    t, c = star_one_red()
    assert red_matching(t, c) == Matching.of([(0, 1)])
    assert red_matching(t, c.swapped()) == Matching.of([(0, 1)])
    ds = double_star()
    c = EdgeColoring.of({e: RED if e == (0, 1) else BLUE for e in ds.edges})
    assert red_matching(ds, c).edges == {(0, 1)}
    with pytest.raises(NotConflictFree):
        red_matching(ds, EdgeColoring.of({e: BLUE for e in ds.edges}))


def test_matching_to_coloring_examples(k13):
    assert verify_conflict_free(k13, matching_to_coloring(k13, [(0, 2)]))
    ds = double_star()
    assert verify_conflict_free(ds, matching_to_coloring(ds, [(0, 1)]))
    p6 = path(6)
    c = matching_to_coloring(p6, [(0, 1), (3, 4)])
    assert c.is_total(p6)
    with pytest.raises(UnknownEdge):
        matching_to_coloring(k13, [(2, 3)])


def test_red_edges_form_dim_exhaustive():
    for n in range(3, 13):
        for t in enumerate_trees(n, no_deg2=True):
            for c in enumerate_cf_2_colorings(t):
                color = tree_conflict_free_color(t, c)
                m = red_matching(t, c)
                assert is_dominating_induced(t, m)
                assert matching_to_coloring(t, m) == (c if color == RED else c.swapped())
                assert red_matching(t, matching_to_coloring(t, m)) == m


def test_canonicalize_makes_red_cf(k13):
    t, c = star_one_red()
    flipped = c.swapped()
    assert tree_conflict_free_color(t, canonicalize(t, flipped)) == RED


def test_coloring_text_round_trip(tmp_path):
    c = EdgeColoring.of({(3, 1): 2, (0, 1): 1, (1, 2): 3})
    text = format_coloring(c)
    assert text == "0 1 1\n1 2 3\n1 3 2\n"
    assert parse_coloring(text) == c
    p = tmp_path / "c.col"
    write_coloring(c, p)
    assert p.read_text() == text and read_coloring(p) == c


def test_all_assignments_of_star_exactly_six_valid(k13):
    valid = 0
    for cols in itertools.product((1, 2), repeat=3):
        valid += bool(verify_conflict_free(k13, EdgeColoring(dict(zip(k13.edges, cols)), 2)))
    assert valid == 6
