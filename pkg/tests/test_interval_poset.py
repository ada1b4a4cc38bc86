import pytest

from conftest import ip
from tamari_intervals import (
    AxiomViolation,
    Cycle,
    DuplicateParent,
    IntervalPoset,
    IntervalPosetError,
    NotAnInterval,
    SizeMismatch,
    contacts,
    dec_forest_of_tree,
    dyck_from_tree,
    enumerate_interval_posets,
    enumerate_trees,
    from_tree_pair,
    inc_forest_of_tree,
    initial_rise_path,
    left_comb,
    lower_tree,
    parse_tree,
    right_comb,
    stat_ir,
    stat_trees,
    stats,
    tamari_leq,
    tamari_leq_bruteforce,
    upper_tree,
    validate,
)

LOWER4 = "((.((..).)).)"  # 4(1(., 3(2, .)), .)
UPPER4 = "(.(.((..).)))"  # 1(., 2(., 4(3, .)))


def tamari_pairs(n):
    trees = enumerate_trees(n)
    return [(a, b) for a in trees for b in trees if tamari_leq_bruteforce(a, b)]


# -- validate ---------------------------------------------------------------------


def test_validate_sample(poset4):
    assert poset4.n == 4
    assert poset4.dec_covers() == [(2, 1), (3, 1)]
    assert poset4.inc_covers() == [(3, 4)]


def test_validate_axiom_violation():
    with pytest.raises(AxiomViolation, match="2->1"):
        validate(3, [(3, 1)])
    with pytest.raises(AxiomViolation):
        validate(3, [(1, 3)])


def test_validate_empty():
    assert validate(0, []) == IntervalPoset.empty()


def test_validate_cycle():
    with pytest.raises(Cycle):
        validate(2, [(1, 2), (2, 1)])
    with pytest.raises(Cycle):
        validate(2, [(1, 1)])


def test_validate_duplicate_parent():
    # 2 ⊲ 1 and 3 ⊲ 1 and 3 ⊲ 2 are fine; two incomparable parents are not
    with pytest.raises(DuplicateParent):
        validate(3, [(1, 2), (1, 3)])


def test_validate_out_of_range():
    with pytest.raises(IntervalPosetError):
        validate(2, [(1, 3)])


def test_validate_accepts_redundant_relations(poset4):
    full = validate(4, sorted(poset4.relations()))
    assert full == poset4


# -- tree pairs ---------------------------------------------------------------------


def test_from_tree_pair_sample(poset4):
    lo, hi = parse_tree(LOWER4), parse_tree(UPPER4)
    assert from_tree_pair(lo, hi) == poset4
    assert lower_tree(poset4) == lo
    assert upper_tree(poset4) == hi
    assert dyck_from_tree(lo).steps == "UUDUDDUD"
    assert dyck_from_tree(hi).steps == "UUUDUDDD"


def test_from_tree_pair_degenerate():
    for t in enumerate_trees(4):
        i = from_tree_pair(t, t)
        dec = {(v, p) for v, p in dec_forest_of_tree(t).parents().items() if p}
        inc = {(v, p) for v, p in inc_forest_of_tree(t).parents("postorder").items() if p}
        assert set(i.covers()) == dec | inc


def test_from_tree_pair_not_an_interval():
    with pytest.raises(NotAnInterval):
        from_tree_pair(right_comb(2), left_comb(2))
    with pytest.raises(SizeMismatch):
        from_tree_pair(right_comb(2), left_comb(3))


def test_lower_upper_examples():
    assert lower_tree(IntervalPoset.empty(3)) == left_comb(3)
    assert upper_tree(IntervalPoset.empty(3)) == right_comb(3)
    assert lower_tree(ip(2, (2, 1))) == right_comb(2)
    assert upper_tree(ip(2, (1, 2))) == left_comb(2)


@pytest.mark.parametrize("n", range(7))
def test_tree_pair_round_trip(n):
    for t1, t2 in tamari_pairs(n):
        i = from_tree_pair(t1, t2)
        assert (lower_tree(i), upper_tree(i)) == (t1, t2)


@pytest.mark.parametrize("n", range(7))
def test_closure_stability(n):
    for t1, t2 in tamari_pairs(n):
        i = from_tree_pair(t1, t2)
        dec = {(b, a) for a in range(1, n + 1) for b in i.dec_descendants(a)}
        inc = {(a, c) for c in range(1, n + 1) for a in i.inc_descendants(c)}
        assert i.relations() == dec | inc


# -- statistics ------------------------------------------------------------------------


def test_statistics_examples(poset4):
    assert stats(poset4) == (4, 2, 3)
    assert stat_trees(IntervalPoset.empty()) == 0
    assert stat_trees(ip(2, (1, 2))) == 2
    assert stat_ir(ip(1)) == 1
    assert stat_ir(ip(2, (2, 1))) == 2


@pytest.mark.parametrize("n", range(1, 7))
def test_statistics_match_paths(n):
    for i in enumerate_interval_posets(n):
        assert stat_trees(i) == contacts(dyck_from_tree(lower_tree(i)))
        assert stat_ir(i) == initial_rise_path(dyck_from_tree(upper_tree(i)))
        assert 1 <= stat_trees(i) <= n and 1 <= stat_ir(i) <= n


# -- Tamari order -------------------------------------------------------------------------


@pytest.mark.parametrize("n", range(6))
def test_tamari_leq_matches_oracle(n):
    trees = enumerate_trees(n)
    pairs = [(a, b) for a in trees for b in trees]
    assert len(pairs) == len(trees) ** 2  # 1225 at n = 5
    for a, b in pairs:
        assert tamari_leq(a, b) == tamari_leq_bruteforce(a, b)


def test_tamari_leq_examples():
    trees = enumerate_trees(4)
    assert all(tamari_leq(left_comb(4), t) for t in trees)
    assert sum(tamari_leq(a, b) for a in trees for b in trees) == 68
    with pytest.raises(SizeMismatch):
        tamari_leq(left_comb(1), left_comb(2))


# -- accessors -------------------------------------------------------------------------------


def test_forest_accessors(poset4):
    assert list(poset4.dec_descendants(1)) == [2, 3]
    assert list(poset4.inc_descendants(4)) == [3]
    assert poset4.dec_roots() == [1, 4]
    assert poset4.dec_children(1) == [2, 3]
    assert poset4.precedes(3, 4) and not poset4.precedes(4, 3)
    assert str(poset4) == "4: 2->1, 3->1, 3->4"
