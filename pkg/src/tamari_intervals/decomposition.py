"""Lower-contacts and initial-rise decompositions, and the bijection ``beta``.

``beta`` lower-contacts-decomposes an interval-poset and recomposes the
(recursively transformed) parts with the initial-rise composition.  It swaps
the ``trees`` and ``ir`` statistics.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .catalan import PlanarForest
from .interval_poset import (
    IntervalPoset,
    IntervalPosetError,
    cut_block,
    restrict,
    stat_ir,
    stat_trees,
)


class ROutOfRange(IntervalPosetError):
    pass


class EmptyPoset(IntervalPosetError):
    pass


class LCTriple(NamedTuple):
    i1: IntervalPoset
    i2: IntervalPoset
    r: int


class IRTriple(NamedTuple):
    i1: IntervalPoset
    i2: IntervalPoset
    r: int


def _shift(p, by):
    return None if p is None else p + by


def _dec_from_counts(counts: list[int]) -> tuple:
    forest = PlanarForest.from_children_counts(counts)
    return tuple(forest.parents("preorder").values())


# -- lower contacts -------------------------------------------------------------


def lc_compose(i1: IntervalPoset, i2: IntervalPoset, r: int) -> IntervalPoset:
    """``i1``, a new vertex ``k``, then ``i2``; ``k`` takes all of ``i1`` below it
    (increasing) and the first ``r`` decreasing roots of ``i2`` (decreasing)."""
    if not 0 <= r <= stat_trees(i2):
        raise ROutOfRange(f"r={r} not in 0..{stat_trees(i2)}")
    k = i1.n + 1
    attach = set(i2.dec_roots()[:r])
    dec = i1.dec + (None,) + tuple(
        k if v in attach else _shift(p, k) for v, p in enumerate(i2.dec, 1)
    )
    inc = tuple(k if p is None else p for p in i1.inc) + (None,) + tuple(
        _shift(p, k) for p in i2.inc
    )
    return IntervalPoset(i1.n + 1 + i2.n, dec, inc)


def lc_decompose(i: IntervalPoset) -> LCTriple:
    if i.n == 0:
        raise EmptyPoset("cannot decompose the empty interval-poset")
    # largest k with every smaller label below it
    k = max(v for v in range(1, i.n + 1) if i.inc_descendants(v).start == 1)
    return LCTriple(restrict(i, 1, k - 1), restrict(i, k + 1, i.n), len(i.dec_children(k)))


# -- initial rise -------------------------------------------------------------


def ir_insert(i2: IntervalPoset, r: int) -> IntervalPoset:
    """Insert a vertex at ``ir(i2) - r + 1``, keeping every old vertex's number
    of decreasing children."""
    ir = stat_ir(i2)
    if not 0 <= r <= ir:
        raise ROutOfRange(f"r={r} not in 0..{ir}")
    k = ir - r + 1

    def up(p):
        return p if p is None or p < k else p + 1

    inc = [up(p) for p in i2.inc]
    inc.insert(k - 1, k + 1 if k <= i2.n else None)
    counts = i2.dec_children_counts()
    counts.insert(k - 1, 0)
    return IntervalPoset(i2.n + 1, _dec_from_counts(counts), tuple(inc))


def ir_remove(i2p: IntervalPoset) -> IRTriple:
    """Undo :func:`ir_insert`: returns ``(empty, i2, r)``.

    The inserted vertex is always the initial rise of the result.
    """
    k = stat_ir(i2p)
    counts = i2p.dec_children_counts()
    if counts.pop(k - 1) != 0:
        raise IntervalPosetError(f"vertex {k} has decreasing children; not an insertion")

    def down(p):
        if p is None or p < k:
            return p
        if p == k:
            raise IntervalPosetError(f"vertex {k} has increasing children; not an insertion")
        return p - 1

    inc = [down(p) for v, p in enumerate(i2p.inc, 1) if v != k]
    i2 = IntervalPoset(i2p.n - 1, _dec_from_counts(counts), tuple(inc))
    return IRTriple(IntervalPoset.empty(), i2, stat_ir(i2) - k + 1)


def ir_compose(i1: IntervalPoset, i2: IntervalPoset, r: int) -> IntervalPoset:
    """Insert into ``i2`` (see :func:`ir_insert`), then splice the result into
    ``i1`` right after ``a = ir(i1)``, hanging it below ``a`` (decreasing) and
    below ``a``'s old successor (increasing)."""
    i2p = ir_insert(i2, r)
    if i1.n == 0:
        return i2p
    a = stat_ir(i1)
    s = i2p.n
    b = a + 1 + s if a != i1.n else None

    def move(p):
        return p if p is None or p <= a else p + s

    dec = (
        tuple(move(p) for p in i1.dec[:a])
        + tuple(a if p is None else p + a for p in i2p.dec)
        + tuple(move(p) for p in i1.dec[a:])
    )
    inc = (
        tuple(move(p) for p in i1.inc[:a])
        + tuple(b if p is None else p + a for p in i2p.inc)
        + tuple(move(p) for p in i1.inc[a:])
    )
    return IntervalPoset(i1.n + s, dec, inc)


def _splice_vertex(i: IntervalPoset, m: int) -> int:
    """The vertex ``a`` after which the inserted block was spliced, or 0.

    ``a`` is the deepest decreasing ancestor of ``ir(i)`` whose decreasing
    subtree runs exactly up to its increasing parent (or to ``n`` if it has
    none).  Vertices inside the spliced block never have this property.
    """
    for v in i.dec_ancestors(m):
        end = i.dec_descendants(v).stop - 1
        p = i.inc[v - 1]
        if (p is not None and end == p - 1) or (p is None and end == i.n):
            return v
    return 0


def ir_decompose(i: IntervalPoset) -> IRTriple:
    if i.n == 0:
        raise EmptyPoset("cannot decompose the empty interval-poset")
    m = stat_ir(i)
    a = _splice_vertex(i, m)
    p = i.inc[a - 1] if a else None
    block_end = p - 1 if p is not None else i.n
    i2p = restrict(i, a + 1, block_end)
    i1 = cut_block(i, a + 1, block_end)
    _, i2, r = ir_remove(i2p)
    return IRTriple(i1, i2, r)


# -- the bijection ------------------------------------------------------------


@lru_cache(maxsize=None)
def beta(i: IntervalPoset) -> IntervalPoset:
    if i.n == 0:
        return i
    i1, i2, r = lc_decompose(i)
    return ir_compose(beta(i1), beta(i2), r)


@lru_cache(maxsize=None)
def beta_inverse(i: IntervalPoset) -> IntervalPoset:
    if i.n == 0:
        return i
    j1, j2, r = ir_decompose(i)
    return lc_compose(beta_inverse(j1), beta_inverse(j2), r)
