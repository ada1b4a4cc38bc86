import pytest

from conftest import ip
from tamari_intervals import (
    EmptyPoset,
    IntervalPoset,
    ROutOfRange,
    beta,
    beta_inverse,
    enumerate_interval_posets,
    ir_compose,
    ir_decompose,
    ir_insert,
    lc_compose,
    lc_decompose,
    stat_ir,
    stat_trees,
    validate,
)

E = IntervalPoset.empty()
ONE = ip(1)

LC_EXAMPLES = [
    (
        (ip(3, (1, 2), (3, 2)), ip(4, (2, 3), (4, 3)), 2),
        ip(8, (1, 2), (2, 4), (3, 4), (3, 2), (5, 4), (6, 4), (6, 7), (8, 7)),
    ),
    ((E, E, 0), ONE),
    ((ONE, E, 0), ip(2, (1, 2))),
    ((ONE, ONE, 1), ip(3, (1, 2), (3, 2))),
]

IR_EXAMPLES = [
    (
        (ip(3, (2, 3), (2, 1), (3, 1)), ip(2, (2, 1)), 1),
        ip(6, (2, 6), (3, 6), (4, 5), (5, 6), (2, 1), (3, 2), (4, 3), (5, 2), (6, 1)),
    ),
    ((ONE, ONE, 1), ip(3, (2, 3), (2, 1), (3, 1))),
    ((ONE, E, 0), ip(2, (2, 1))),
    ((E, E, 0), ONE),
]

# the fully worked example: input, output
BETA_BIG = (
    ip(6, (1, 2), (2, 4), (3, 4), (5, 6), (3, 2), (5, 4)),
    ip(6, (2, 6), (3, 6), (4, 5), (5, 6), (2, 1), (3, 2), (4, 3), (5, 2), (6, 1)),
)


def all_posets(max_n):
    return [i for n in range(max_n + 1) for i in enumerate_interval_posets(n)]


def by_size(max_n):
    return {n: enumerate_interval_posets(n) for n in range(max_n + 1)}


# -- lower contacts ----------------------------------------------------------------


@pytest.mark.parametrize("triple, expected", LC_EXAMPLES)
def test_lc_compose_examples(triple, expected):
    assert lc_compose(*triple) == expected
    assert lc_decompose(expected) == triple


def test_lc_compose_rejects_bad_r():
    with pytest.raises(ROutOfRange):
        lc_compose(ONE, ONE, 2)
    with pytest.raises(EmptyPoset):
        lc_decompose(E)


def test_lc_bookkeeping():
    sizes = by_size(5)
    for n1, p1 in sizes.items():
        for n2, p2 in sizes.items():
            if n1 + n2 + 1 > 6:
                continue
            for i1 in p1:
                for i2 in p2:
                    for r in range(stat_trees(i2) + 1):
                        i = lc_compose(i1, i2, r)
                        assert stat_trees(i) == stat_trees(i1) + 1 + stat_trees(i2) - r
                        assert stat_ir(i) == (stat_ir(i1) if n1 else stat_ir(i2) + 1)
                        assert lc_decompose(i) == (i1, i2, r)


# -- initial rise ------------------------------------------------------------------


def test_ir_insert_examples():
    before = ip(6, (2, 5), (3, 5), (4, 5), (2, 1), (3, 1), (4, 3), (5, 1), (6, 5))
    expected = ip(7, (2, 6), (3, 4), (4, 6), (5, 6), (2, 1), (3, 1), (4, 1), (5, 4), (7, 6))
    assert ir_insert(before, 2) == expected
    assert ir_insert(E, 0) == ONE
    assert ir_insert(ip(2, (2, 1)), 1) == ip(3, (2, 3), (2, 1))


def test_ir_insert_statistic():
    for i in all_posets(5):
        for r in range(stat_ir(i) + 1):
            assert stat_ir(ir_insert(i, r)) == stat_ir(i) + 1 - r
    with pytest.raises(ROutOfRange):
        ir_insert(ONE, 2)


@pytest.mark.parametrize("triple, expected", IR_EXAMPLES)
def test_ir_compose_examples(triple, expected):
    assert ir_compose(*triple) == expected
    assert ir_decompose(expected) == triple


def test_ir_decompose_empty():
    with pytest.raises(EmptyPoset):
        ir_decompose(E)


def test_ir_round_trip_and_bookkeeping():
    sizes = by_size(5)
    seen = set()
    for n1, p1 in sizes.items():
        for n2, p2 in sizes.items():
            if n1 + n2 + 1 > 6:
                continue
            for j1 in p1:
                for j2 in p2:
                    for r in range(stat_ir(j2) + 1):
                        i = ir_compose(j1, j2, r)
                        assert validate(i.n, i.covers()) == i
                        assert ir_decompose(i) == (j1, j2, r)
                        assert stat_ir(i) == stat_ir(j1) + stat_ir(j2) + 1 - r
                        assert stat_trees(i) == (stat_trees(j1) if n1 else stat_trees(j2) + 1)
                        seen.add(i)
    # every poset of size <= 6 arises exactly once
    assert seen == set(all_posets(6)) - {E}


# -- beta ------------------------------------------------------------------------------


def test_beta_examples():
    assert beta(ip(2, (1, 2))) == ip(2, (2, 1))
    assert beta(ip(3, (1, 2), (3, 2))) == ip(3, (2, 3), (2, 1), (3, 1))
    src, dst = BETA_BIG
    assert beta(src) == dst
    assert (stat_trees(src), stat_ir(src)) == (4, 1)
    assert (stat_trees(dst), stat_ir(dst)) == (1, 4)


def test_beta_big_example_text():
    from tamari_intervals import render_object

    src, dst = BETA_BIG
    assert render_object(src) == "6: 3->2, 5->4, 1->2, 2->4, 3->4, 5->6"
    assert render_object(beta(src)) == "6: 2->1, 3->2, 4->3, 5->2, 6->1, 2->6, 3->6, 4->5, 5->6"


def test_beta_inverse_examples():
    assert beta_inverse(ip(2, (2, 1))) == ip(2, (1, 2))
    assert beta_inverse(E) == E
    assert beta_inverse(BETA_BIG[1]) == BETA_BIG[0]


@pytest.mark.parametrize("n", range(7))
def test_beta_contract(n):
    posets = enumerate_interval_posets(n)
    images = [beta(i) for i in posets]
    assert len(set(images)) == len(posets)
    for i, j in zip(posets, images):
        assert j.n == n
        assert (stat_trees(j), stat_ir(j)) == (stat_ir(i), stat_trees(i))
        assert beta_inverse(j) == i
        assert beta(beta_inverse(i)) == i


@pytest.mark.parametrize("n", range(7))
def test_beta_involution(n):
    for i in enumerate_interval_posets(n):
        assert beta(beta(i)) == i
        assert beta_inverse(i) == beta(i)
