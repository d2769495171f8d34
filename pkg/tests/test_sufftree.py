import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import naive
from distinct_squares import (
    DecorationError,
    analyze,
    build_position_lists,
    decorate_with_squares,
    locate_square_by_descent,
    prepare_text,
)
from distinct_squares.sufftree import NONE


def decorate(a):
    return decorate_with_squares(a.tree, build_position_lists(a.squares, a.text.n))


def check_tree(tree):
    """Structural invariants shared by all trees built here."""
    leaves = tree.leaves()
    assert sorted(tree.label[v] for v in leaves) == list(range(1, tree.n + 1))
    for v in range(len(tree)):
        if v == tree.root:
            continue
        assert tree.depth[tree.parent[v]] < tree.depth[v]
        if not tree.is_leaf(v):
            assert len(list(tree.children(v))) >= 2 or tree.depth[v] > 0
    for v in leaves:
        s = tree.label[v]
        assert tree.string_label(v) == tree.text.data[s - 1 :]


def test_running_example_shape(running):
    tree = running.tree
    check_tree(tree)
    assert len(tree.leaves()) == 12
    assert sorted(tree.depth[v] for v in tree.internal_nodes()) == [0, 1, 2, 2, 3, 4, 5]
    labels = {tree.string_label(v) for v in tree.internal_nodes()}
    assert labels == {b"", b"a", b"aa", b"aba", b"ababa", b"ba", b"baba"}


def test_tiny_trees():
    t = analyze("").tree
    assert len(t) == 2 and list(t.children(t.root)) == t.leaves()
    t = analyze("ab").tree
    assert len(list(t.children(t.root))) == 3
    assert all(t.is_leaf(c) for c in t.children(t.root))


def test_children_sorted_by_first_symbol(running):
    tree = running.tree
    for v in tree.internal_nodes():
        firsts = [tree.edge_label(c)[0] for c in tree.children(v)]
        assert firsts == sorted(firsts)


def test_post_order_lists_children_first(running):
    seen = set()
    for v in running.tree.post_order():
        assert all(c in seen for c in running.tree.children(v))
        seen.add(v)
    assert len(seen) == len(running.tree)


def test_running_example_decoration(running):
    tree = running.tree
    got = {(tree.string_label(e.node), e.length) for e in decorate(running)}
    assert got == {(b"aa", 2), (b"ababa", 4), (b"baba", 4)}


def test_decoration_of_aaaa():
    a = analyze("aaaa")
    got = sorted((a.tree.string_label(e.node), e.length) for e in decorate(a))
    # "aaaa" only ends on the leaf edge of suffix 1
    assert got == [(b"aa", 2), (b"aaaa\x00", 4)]


def test_square_free_decoration_is_empty():
    assert decorate(analyze("abcd")) == []


def test_descent_examples(running):
    tree = running.tree
    assert tree.string_label(locate_square_by_descent(tree, running.text, 5, 2)) == b"aa"
    a = analyze("aaaa")
    v = locate_square_by_descent(a.tree, a.text, 1, 4)
    assert a.tree.depth[v] >= 4 and a.tree.string_label(v).startswith(b"aaaa")
    # a square running to the last body symbol is only found on a leaf edge
    a = analyze("abab")
    v = locate_square_by_descent(a.tree, a.text, 1, 4)
    assert a.tree.is_leaf(v)


def test_descent_rejects_absent_substring(running):
    with pytest.raises(LookupError):
        locate_square_by_descent(running.tree, prepare_text("cc"), 1, 2)


def test_dropped_nonempty_list_is_detected(running):
    lists = build_position_lists([(3, 2)], running.text.n)  # "ab" at 3 is not leftmost
    with pytest.raises(DecorationError):
        decorate_with_squares(running.tree, lists)


def test_split_edge_and_copy(running):
    tree = running.tree.copy()
    leaf = tree.leaf_of[1]
    old_parent = tree.parent[leaf]
    w = tree.split_edge(leaf, tree.depth[old_parent] + 1)
    assert tree.parent[leaf] == w and tree.parent[w] == old_parent
    assert running.tree.parent[leaf] == old_parent
    with pytest.raises(ValueError):
        tree.split_edge(leaf, tree.depth[leaf])
    check_tree(tree)


def test_dot_output_mentions_every_node(running):
    dot = running.tree.to_dot({5: "sq 2"})
    assert dot.startswith("digraph")
    assert dot.count(" -> ") == len(running.tree) - 1
    assert "sq 2" in dot


@settings(max_examples=120, deadline=None)
@given(st.text(alphabet="abc", max_size=60))
def test_decoration_matches_descent(raw):
    a = analyze(raw)
    check_tree(a.tree)
    assert a.tree.parent[a.tree.root] == NONE
    entries = decorate(a)
    assert len(entries) == len(a.squares)
    expected = sorted((locate_square_by_descent(a.tree, a.text, s, l), l) for s, l in a.squares)
    assert sorted(entries) == expected
    assert [(s, l) for s, l in a.squares] == naive.distinct_squares(a.text.data)
