import pytest
from hypothesis import given, settings

from cfindex.errors import EdgeListSyntaxError, EmptyList, IsRoot, NotALeaf, NotATree
from cfindex.oracle import enumerate_trees
from cfindex.tree_core import (
    RootedTree,
    Shape,
    Tree,
    classify_rooted,
    degree_decompose,
    format_tree,
    level_of,
    parse_tree,
    read_tree,
    root_at_leaf,
    subtree_of,
    tree_sum,
    tree_sum_with_maps,
    write_tree,
)

from conftest import path, star, trees, two_stars_joined


def test_parse_single_edge():
    t = parse_tree("0 1")
    assert t.vertices == [0, 1] and t.edges == [(0, 1)]


def test_parse_star_keeps_ids():
    t = parse_tree("0 1\n1 2\n1 3")
    assert t.degree(1) == 3 and t.leaves() == [0, 2, 3]


def test_parse_cycle_rejected():
    with pytest.raises(NotATree):
        parse_tree("0 1\n1 2\n2 0")


@pytest.mark.parametrize("text", ["0 1\n0 0", "0 1\n2 3", "0 1\n0 1"])
def test_parse_rejects_non_trees(text):
    with pytest.raises(NotATree):
        parse_tree(text)


def test_parse_syntax_error_has_line_number():
    with pytest.raises(EdgeListSyntaxError) as info:
        parse_tree("# c\n0 1\n1 x\n")
    assert info.value.lineno == 3


def test_parse_skips_comments_and_blanks():
    assert parse_tree("# hi\n\n 2  5 \n").edges == [(2, 5)]


def test_file_round_trip(tmp_path):
    t = Tree([(5, 3), (3, 9), (3, 1)])
    p = tmp_path / "t.tree"
    write_tree(t, p)
    assert p.read_text() == "1 3\n3 5\n3 9\n"
    assert read_tree(p) == t


@given(trees())
def test_format_parse_round_trip(t):
    assert parse_tree(format_tree(t)) == t


def test_root_at_leaf_default_is_smallest_leaf():
    rt = root_at_leaf(Tree([(1, 0), (1, 2), (1, 3)]))
    assert rt.root == 0 and rt.level[1] == 1


def test_root_at_given_leaf():
    rt = root_at_leaf(Tree([(0, 1)]), 1)
    assert rt.root == 1 and rt.children[1] == (0,)


def test_root_at_center_fails(k13):
    with pytest.raises(NotALeaf):
        root_at_leaf(k13, 0)


def test_subtree_of_center_is_whole_star(k13):
    rt = root_at_leaf(k13)
    sub = subtree_of(rt, 0)
    assert sub.tree == k13 and sub.root == 1


def test_subtree_of_leaf_is_edge(k13):
    rt = root_at_leaf(k13)
    sub = subtree_of(rt, 3)
    assert sub.tree.edges == [(0, 3)] and sub.root == 0


def test_subtree_of_path_end():
    rt = root_at_leaf(path(3), 0)
    sub = subtree_of(rt, 2)
    assert sub.root == 1 and sub.tree.edges == [(1, 2)]


def test_subtree_of_root_fails(k13):
    rt = root_at_leaf(k13)
    with pytest.raises(IsRoot):
        subtree_of(rt, rt.root)


def test_level_of_small_cases(k13):
    assert level_of(RootedTree.from_tree(Tree([], [7]), 7)) == 1
    assert level_of(root_at_leaf(path(2))) == 2
    assert level_of(root_at_leaf(k13)) == 3


@given(trees(min_n=2))
def test_subtree_level_matches_height(t):
    rt = root_at_leaf(t)
    for v in t.vertices:
        if v != rt.root:
            assert level_of(subtree_of(rt, v)) == 1 + 1 + rt.height(v)


def test_classify_examples(k13):
    assert classify_rooted(root_at_leaf(k13)) is Shape.FULL
    # root 0 - c=1, c has a leaf 2 and d=3; d has leaves 4, 5
    t = Tree([(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)])
    assert classify_rooted(root_at_leaf(t, 0)) is Shape.COMPLETE_NOT_FULL
    assert classify_rooted(root_at_leaf(path(3), 0)) is Shape.NEITHER_COMPLETE


def test_full_implies_aligned_leaves_exhaustive():
    for n in range(2, 13):
        for t in enumerate_trees(n):
            for r in t.leaves():
                rt = root_at_leaf(t, r)
                if classify_rooted(rt) is Shape.FULL:
                    last = level_of(rt) - 1
                    assert all(rt.level[v] == last for v in t.leaves() if v != r)


def test_tree_sum_of_two_edges():
    e = RootedTree.from_tree(Tree([(0, 1)]), 0)
    s = tree_sum([e, e])
    assert s.root == 0 and s.children[0] == (1,) and len(s.children[1]) == 2
    assert classify_rooted(s) is Shape.FULL


def test_tree_sum_single_part_adds_root_edge(k13):
    part = root_at_leaf(k13)
    s, maps = tree_sum_with_maps([part])
    assert len(s) == len(part) + 1
    assert maps[0][part.root] == 1


def test_tree_sum_sizes_and_maps(k13):
    parts = [root_at_leaf(k13), root_at_leaf(path(2)), root_at_leaf(k13)]
    s, maps = tree_sum_with_maps(parts)
    assert len(s) == sum(len(p) for p in parts) - (len(parts) - 1) + 1
    for part, m in zip(parts, maps):
        for a, b in part.tree.edges:
            assert s.tree.has_edge(m[a], m[b])


def test_tree_sum_empty():
    with pytest.raises(EmptyList):
        tree_sum([])


def test_decompose_path():
    d = degree_decompose(path(6))
    assert d.t_eq2 == [[0, 1, 2, 3, 4, 5]] and d.t_ge3 == []


def test_decompose_star(k13):
    d = degree_decompose(k13)
    assert d.t_eq2 == [] and [c.edges for c in d.t_ge3] == [k13.edges]


def test_decompose_joined_stars():
    d = degree_decompose(two_stars_joined(3))
    assert len(d.t_ge3) == 2 and all(len(c) == 4 for c in d.t_ge3)
    assert len(d.t_eq2) == 1 and len(d.t_eq2[0]) == 5


def test_decompose_single_edge_is_in_neither_part():
    d = degree_decompose(path(2))
    assert d.t_eq2 == [] and d.t_ge3 == []


@settings(max_examples=200)
@given(trees(min_n=3))
def test_decompose_covers_edges(t):
    d = degree_decompose(t)
    eq2 = {tuple(sorted(e)) for p in d.t_eq2 for e in zip(p, p[1:])}
    ge3 = {e for c in d.t_ge3 for e in c.edges}
    assert eq2 | ge3 == set(t.edges)
    for u, v in t.edges:
        if t.degree(u) == 2 and t.degree(v) == 2:
            assert (u, v) not in ge3
    for p in d.t_eq2:
        assert all(t.degree(x) == 2 for x in p[1:-1])
