import itertools

import pytest

from tamari_intervals import (
    BinaryTree,
    DyckPath,
    MalformedPath,
    NoLeftChild,
    PlanarForest,
    SizeMismatch,
    catalan,
    contacts,
    dec_forest_of_tree,
    dyck_from_tree,
    enumerate_forests,
    enumerate_trees,
    inc_forest_of_tree,
    initial_rise_path,
    inorder_nodes,
    left_comb,
    parse_tree,
    render_tree,
    right_comb,
    right_rotate,
    tamari_leq_bruteforce,
    tree_from_dec_forest,
    tree_from_dyck,
    tree_from_inc_forest,
    tree_size,
)

LEAF = BinaryTree(None, None)

DEC10 = {1: None, 2: 1, 3: 1, 4: 3, 5: None, 6: 5, 7: 5, 8: 7, 9: 7, 10: 9}
INC10 = {1: 5, 2: 3, 3: 5, 4: 5, 5: None, 6: 7, 7: None, 8: 9, 9: None, 10: None}


@pytest.fixture
def tree10():
    return tree_from_dec_forest(PlanarForest.from_parents(10, DEC10, "preorder"))


# -- trees and paths -------------------------------------------------------------


def test_tree_from_dyck_examples():
    assert tree_from_dyck(DyckPath("UD")) == LEAF
    assert tree_from_dyck(DyckPath("UUDD")) == BinaryTree(None, LEAF)
    assert tree_from_dyck(DyckPath("UDUD")) == BinaryTree(LEAF, None)


def test_dyck_from_tree_examples():
    assert dyck_from_tree(LEAF).steps == "UD"
    assert dyck_from_tree(right_comb(2)).steps == "UUDD"
    assert dyck_from_tree(left_comb(2)).steps == "UDUD"


@pytest.mark.parametrize("word", ["UDD", "DU", "UUD", "UXD"])
def test_malformed_paths(word):
    with pytest.raises(MalformedPath):
        DyckPath(word)


@pytest.mark.parametrize("n", range(9))
def test_tree_dyck_round_trip(n):
    trees = enumerate_trees(n)
    paths = [dyck_from_tree(t) for t in trees]
    assert len(set(p.steps for p in paths)) == len(trees)
    for t, d in zip(trees, paths):
        assert tree_from_dyck(d) == t
        assert dyck_from_tree(tree_from_dyck(d)) == d


# -- rotation ----------------------------------------------------------------------


def test_right_rotate_examples():
    assert right_rotate(left_comb(2), 2) == right_comb(2)
    a = b = c = LEAF
    before = BinaryTree(BinaryTree(a, b), c)  # y(x(A,B),C); y is label 4
    after = BinaryTree(a, BinaryTree(b, c))
    assert right_rotate(before, 4) == after
    with pytest.raises(NoLeftChild):
        right_rotate(right_comb(3), 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_rotation_goes_up(n):
    for t in enumerate_trees(n):
        for pos, node in inorder_nodes(t):
            if node.left is not None:
                s = right_rotate(t, pos)
                assert tamari_leq_bruteforce(t, s)
                assert not tamari_leq_bruteforce(s, t)


# -- enumeration ---------------------------------------------------------------------


def test_enumerate_trees_counts():
    assert enumerate_trees(0) == (None,)
    assert len(enumerate_trees(3)) == 5
    assert len(enumerate_trees(5)) == 42
    for n in range(9):
        trees = enumerate_trees(n)
        assert len(trees) == len(set(trees)) == catalan(n)
        assert all(tree_size(t) == n for t in trees)


def test_enumerate_trees_order_is_by_left_size():
    assert [render_tree(t) for t in enumerate_trees(2)] == ["(.(..))", "((..).)"]


def test_enumerate_forests():
    for n in range(1, 8):
        forests = enumerate_forests(n)
        assert len(forests) == len(set(forests)) == catalan(n)


# -- contacts and initial rise ---------------------------------------------------------


def test_contacts_examples():
    assert contacts(DyckPath("UUDUDDUD")) == 2
    assert contacts(DyckPath("UDUDUD")) == 3
    assert contacts(DyckPath("UUUDDD")) == 1


def test_initial_rise_examples():
    assert initial_rise_path(DyckPath("UUUDUDDD")) == 3
    assert initial_rise_path(DyckPath("UD")) == 1
    assert initial_rise_path(DyckPath("UDUD")) == 1


@pytest.mark.parametrize("n", range(1, 8))
def test_contacts_are_dec_roots(n):
    for t in enumerate_trees(n):
        assert contacts(dyck_from_tree(t)) == len(dec_forest_of_tree(t).trees)


@pytest.mark.parametrize("n", range(1, 8))
def test_initial_rise_is_prefix_without_left_subtrees(n):
    for t in enumerate_trees(n):
        nodes = dict(inorder_nodes(t))
        k = 0
        while k < n and nodes[k + 1].left is None:
            k += 1
        assert initial_rise_path(dyck_from_tree(t)) == k


# -- forests ---------------------------------------------------------------------------------


def test_forests_of_a_size_ten_tree(tree10):
    assert dec_forest_of_tree(tree10).parents("preorder") == DEC10
    assert dec_forest_of_tree(tree10).roots() == [1, 5]
    assert inc_forest_of_tree(tree10).parents("postorder") == INC10
    inc = PlanarForest.from_parents(10, INC10, "postorder")
    assert tree_from_inc_forest(inc) == tree10


def test_forest_examples():
    assert dec_forest_of_tree(right_comb(2)).parents() == {1: None, 2: 1}
    assert dec_forest_of_tree(left_comb(4)).trees == ((),) * 4
    assert inc_forest_of_tree(left_comb(2)).parents("postorder") == {1: 2, 2: None}
    assert inc_forest_of_tree(right_comb(4)).trees == ((),) * 4
    assert tree_from_dec_forest(PlanarForest(((),))) == LEAF
    assert tree_from_dec_forest(PlanarForest(((),) * 3)) == left_comb(3)
    chain = PlanarForest.from_parents(3, {1: 2, 2: 3, 3: None}, "postorder")
    assert tree_from_inc_forest(chain) == left_comb(3)


def test_inc_singletons_give_right_comb():
    # n isolated increasing vertices: no left subtrees anywhere
    assert tree_from_inc_forest(PlanarForest(((),) * 2)) == right_comb(2)


@pytest.mark.parametrize("n", range(9))
def test_forest_round_trips(n):
    for t in enumerate_trees(n):
        assert tree_from_dec_forest(dec_forest_of_tree(t)) == t
        assert tree_from_inc_forest(inc_forest_of_tree(t)) == t
    for f in enumerate_forests(n) if n else ():
        assert dec_forest_of_tree(tree_from_dec_forest(f)) == f
        assert inc_forest_of_tree(tree_from_inc_forest(f)) == f


def test_from_parents_rejects_non_preorder():
    with pytest.raises(ValueError):
        PlanarForest.from_parents(3, {1: None, 2: None, 3: 1}, "preorder")


def test_children_counts_round_trip():
    for n in range(1, 7):
        for f in enumerate_forests(n):
            assert PlanarForest.from_children_counts(f.children_counts()) == f


# -- the rotation oracle -------------------------------------------------------------------


def test_oracle_examples():
    t = parse_tree("((..)(..))")
    assert tamari_leq_bruteforce(t, t)
    assert tamari_leq_bruteforce(left_comb(4), right_comb(4))
    trees = enumerate_trees(3)
    assert sum(tamari_leq_bruteforce(a, b) for a in trees for b in trees) == 13
    with pytest.raises(SizeMismatch):
        tamari_leq_bruteforce(left_comb(2), left_comb(3))


@pytest.mark.parametrize("n", range(1, 6))
def test_oracle_is_partial_order(n):
    trees = enumerate_trees(n)
    leq = {(a, b): tamari_leq_bruteforce(a, b) for a in trees for b in trees}
    for a, b in itertools.product(trees, repeat=2):
        if a != b:
            assert not (leq[a, b] and leq[b, a])
    for a, b, c in itertools.product(trees, repeat=3):
        if leq[a, b] and leq[b, c]:
            assert leq[a, c]
