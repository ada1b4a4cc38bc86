"""Interval-posets of the Tamari lattice.

An interval-poset of size ``n`` is a partial order ``⊲`` on ``1..n`` such that
for ``a < b < c``:

* ``a ⊲ c`` implies ``b ⊲ c``  (increasing relations);
* ``c ⊲ a`` implies ``b ⊲ a``  (decreasing relations).

Decreasing relations form a forest whose subtrees are label blocks just above
their root (preorder labeling); increasing relations form a forest whose
subtrees are label blocks just below their root (postorder labeling).  The
poset is stored as the two parent maps of these forests.  The decreasing
forest is the final forest of the lower tree of the interval, the increasing
forest the initial forest of the upper tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Optional

from .catalan import (
    PlanarForest,
    SizeMismatch,
    Tree,
    dec_forest_of_tree,
    inc_forest_of_tree,
    tree_from_dec_forest,
    tree_from_inc_forest,
    tree_size,
)


class IntervalPosetError(ValueError):
    pass


class AxiomViolation(IntervalPosetError):
    pass


class Cycle(IntervalPosetError):
    pass


class DuplicateParent(IntervalPosetError):
    pass


class NotAnInterval(IntervalPosetError):
    pass


Parents = tuple[Optional[int], ...]


@dataclass(frozen=True)
class IntervalPoset:
    """Parent maps indexed by ``vertex - 1``; ``None`` marks a root.

    ``dec[b - 1] == a`` means ``b ⊲ a`` with ``a < b``;
    ``inc[a - 1] == c`` means ``a ⊲ c`` with ``a < c``.

    The constructor trusts its input; use :func:`validate` for untrusted data.
    """

    n: int
    dec: Parents
    inc: Parents

    @classmethod
    def empty(cls, n: int = 0) -> IntervalPoset:
        return cls(n, (None,) * n, (None,) * n)

    @classmethod
    def from_covers(
        cls,
        n: int,
        dec: dict[int, int] | Iterable[tuple[int, int]] = (),
        inc: dict[int, int] | Iterable[tuple[int, int]] = (),
    ) -> IntervalPoset:
        """Build from cover pairs ``(child, parent)`` without validating."""
        d: list[Optional[int]] = [None] * n
        i: list[Optional[int]] = [None] * n
        for child, parent in dict(dec).items():
            d[child - 1] = parent
        for child, parent in dict(inc).items():
            i[child - 1] = parent
        return cls(n, tuple(d), tuple(i))

    # -- forest structure ---------------------------------------------------

    @cached_property
    def _dec_end(self) -> tuple[int, ...]:
        """``_dec_end[v-1]``: last label of the decreasing subtree rooted at ``v``."""
        end = list(range(1, self.n + 1))
        for v in range(self.n, 0, -1):
            p = self.dec[v - 1]
            if p is not None:
                end[p - 1] = max(end[p - 1], end[v - 1])
        return tuple(end)

    @cached_property
    def _inc_start(self) -> tuple[int, ...]:
        """``_inc_start[v-1]``: first label of the increasing subtree rooted at ``v``."""
        start = list(range(1, self.n + 1))
        for v in range(1, self.n + 1):
            p = self.inc[v - 1]
            if p is not None:
                start[p - 1] = min(start[p - 1], start[v - 1])
        return tuple(start)

    def dec_descendants(self, v: int) -> range:
        return range(v + 1, self._dec_end[v - 1] + 1)

    def inc_descendants(self, v: int) -> range:
        return range(self._inc_start[v - 1], v)

    def dec_children(self, v: int) -> list[int]:
        return [b for b in self.dec_descendants(v) if self.dec[b - 1] == v]

    def dec_roots(self) -> list[int]:
        return [v for v in range(1, self.n + 1) if self.dec[v - 1] is None]

    def inc_roots(self) -> list[int]:
        return [v for v in range(1, self.n + 1) if self.inc[v - 1] is None]

    def dec_ancestors(self, v: int) -> list[int]:
        out = []
        p = self.dec[v - 1]
        while p is not None:
            out.append(p)
            p = self.dec[p - 1]
        return out

    def dec_forest(self) -> PlanarForest:
        return PlanarForest.from_parents(self.n, self.dec, "preorder")

    def inc_forest(self) -> PlanarForest:
        return PlanarForest.from_parents(self.n, self.inc, "postorder")

    def dec_children_counts(self) -> list[int]:
        counts = [0] * self.n
        for p in self.dec:
            if p is not None:
                counts[p - 1] += 1
        return counts

    # -- the order ----------------------------------------------------------

    def precedes(self, a: int, b: int) -> bool:
        """Strict relation ``a ⊲ b``."""
        if a > b:
            return b < a <= self._dec_end[b - 1]
        if a < b:
            return self._inc_start[b - 1] <= a
        return False

    def relations(self) -> set[tuple[int, int]]:
        """The full (strict) relation set as pairs ``(a, b)`` meaning ``a ⊲ b``."""
        rel = set()
        for v in range(1, self.n + 1):
            rel.update((b, v) for b in self.dec_descendants(v))
            rel.update((a, v) for a in self.inc_descendants(v))
        return rel

    def dec_covers(self) -> list[tuple[int, int]]:
        return [(v, p) for v, p in enumerate(self.dec, 1) if p is not None]

    def inc_covers(self) -> list[tuple[int, int]]:
        return [(v, p) for v, p in enumerate(self.inc, 1) if p is not None]

    def covers(self) -> list[tuple[int, int]]:
        """Decreasing covers first, then increasing, each by ascending vertex."""
        return self.dec_covers() + self.inc_covers()

    # -- statistics -----------------------------------------------------------

    @property
    def size(self) -> int:
        return self.n

    def __str__(self) -> str:
        from .formats import render_poset

        return render_poset(self)


class IntervalStats(NamedTuple):
    size: int
    trees: int
    ir: int


def _closure(n: int, pairs: Iterable[tuple[int, int]]) -> list[int]:
    """Transitive closure as bitsets: bit ``b`` of ``reach[a]`` iff ``a ⊲ b``."""
    reach = [0] * (n + 1)
    for a, b in pairs:
        reach[a] |= 1 << b
    for k in range(1, n + 1):
        bit = 1 << k
        rk = reach[k]
        for a in range(1, n + 1):
            if reach[a] & bit:
                reach[a] |= rk
    return reach


def _covers_of(n: int, reach: list[int], decreasing: bool) -> dict[int, list[int]]:
    """Hasse covers of the decreasing (or increasing) part of the relation."""

    def rel(a: int, b: int) -> bool:
        return bool(reach[a] >> b & 1) and ((a > b) if decreasing else (a < b))

    parents: dict[int, list[int]] = {}
    for a in range(1, n + 1):
        ups = [b for b in range(1, n + 1) if rel(a, b)]
        parents[a] = [b for b in ups if not any(rel(c, b) for c in ups if c != b)]
    return parents


def validate(n: int, relations: Iterable[tuple[int, int]]) -> IntervalPoset:
    """Check a relation list (covers or any generating set) and canonicalize it.

    Pairs ``(a, b)`` mean ``a ⊲ b``.
    """
    pairs = []
    for a, b in relations:
        if not (1 <= a <= n and 1 <= b <= n):
            raise IntervalPosetError(f"relation {a}->{b} outside 1..{n}")
        if a == b:
            raise Cycle(f"self relation {a}->{a}")
        pairs.append((a, b))
    reach = _closure(n, pairs)
    for a in range(1, n + 1):
        if reach[a] >> a & 1:
            raise Cycle(f"vertex {a} lies on a cycle")

    dec_parents = _covers_of(n, reach, decreasing=True)
    inc_parents = _covers_of(n, reach, decreasing=False)
    for kind, parents in (("decreasing", dec_parents), ("increasing", inc_parents)):
        for v, ps in parents.items():
            if len(ps) > 1:
                raise DuplicateParent(f"vertex {v} has {kind} parents {ps}")

    for a in range(1, n + 1):
        for c in range(a + 2, n + 1):
            if reach[a] >> c & 1:
                for b in range(a + 1, c):
                    if not reach[b] >> c & 1:
                        raise AxiomViolation(f"{a}->{c} requires {b}->{c}")
            if reach[c] >> a & 1:
                for b in range(a + 1, c):
                    if not reach[b] >> a & 1:
                        raise AxiomViolation(f"{c}->{a} requires {b}->{a}")

    poset = IntervalPoset(
        n,
        tuple(ps[0] if ps else None for _, ps in sorted(dec_parents.items())),
        tuple(ps[0] if ps else None for _, ps in sorted(inc_parents.items())),
    )
    # consequences of the axioms: contiguous subtrees, closure = union of forests
    expected = {(a, b) for a in range(1, n + 1) for b in range(1, n + 1) if reach[a] >> b & 1}
    if poset.relations() != expected:
        raise AxiomViolation("forest blocks are not contiguous")
    return poset


def from_tree_pair(t1: Tree, t2: Tree) -> IntervalPoset:
    """Decreasing relations of ``dec(t1)`` together with increasing ones of ``inc(t2)``."""
    n = tree_size(t1)
    if n != tree_size(t2):
        raise SizeMismatch(f"sizes differ: {n} vs {tree_size(t2)}")
    dec = dec_forest_of_tree(t1).parents("preorder")
    inc = inc_forest_of_tree(t2).parents("postorder")
    pairs = [(v, p) for v, p in dec.items() if p is not None]
    pairs += [(v, p) for v, p in inc.items() if p is not None]
    try:
        return validate(n, pairs)
    except IntervalPosetError as exc:
        raise NotAnInterval(f"not a Tamari interval: {exc}") from exc


def lower_tree(i: IntervalPoset) -> Tree:
    return tree_from_dec_forest(i.dec_forest())


def upper_tree(i: IntervalPoset) -> Tree:
    return tree_from_inc_forest(i.inc_forest())


def stat_trees(i: IntervalPoset) -> int:
    """Number of components of the decreasing (final) forest."""
    return sum(1 for p in i.dec if p is None)


def stat_ir(i: IntervalPoset) -> int:
    """Length of the longest prefix ``1..k`` without a relation ``v-1 ⊲ v``."""
    for v in range(2, i.n + 1):
        if i.precedes(v - 1, v):
            return v - 1
    return i.n


def stats(i: IntervalPoset) -> IntervalStats:
    return IntervalStats(i.n, stat_trees(i), stat_ir(i))


def tamari_leq(t1: Tree, t2: Tree) -> bool:
    try:
        from_tree_pair(t1, t2)
    except NotAnInterval:
        return False
    return True


# -- label-block surgery used by the decompositions ----------------------------


def restrict(i: IntervalPoset, lo: int, hi: int) -> IntervalPoset:
    """Subposet on labels ``lo..hi``, relabeled to ``1..hi-lo+1``."""

    def shift(p):
        return p - lo + 1 if p is not None and lo <= p <= hi else None

    return IntervalPoset(
        hi - lo + 1,
        tuple(shift(i.dec[v - 1]) for v in range(lo, hi + 1)),
        tuple(shift(i.inc[v - 1]) for v in range(lo, hi + 1)),
    )


def cut_block(i: IntervalPoset, lo: int, hi: int) -> IntervalPoset:
    """Delete labels ``lo..hi`` and close the gap.

    Only meaningful when no vertex outside the block has a parent inside it.
    """
    width = hi - lo + 1

    def shift(p):
        if p is None:
            return None
        if lo <= p <= hi:
            raise IntervalPosetError(f"vertex outside block {lo}..{hi} hangs from {p}")
        return p - width if p > hi else p

    keep = [v for v in range(1, i.n + 1) if not lo <= v <= hi]
    return IntervalPoset(
        i.n - width,
        tuple(shift(i.dec[v - 1]) for v in keep),
        tuple(shift(i.inc[v - 1]) for v in keep),
    )
