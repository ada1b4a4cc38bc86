"""Flows on ordered forests and their bijection with interval-posets.

A flow puts an integer input ``>= -1`` on every node of a planar forest so
that every outgoing rate (own input plus the children's rates) is ``>= 0``.
Nodes are labeled in preorder.  A flow is closed when its exit rate, the sum
of the roots' rates, is zero.  Closed flows of a forest ``F`` are in bijection
with the interval-posets whose upper tree has ``F`` as its final forest.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import NamedTuple, Sequence

from .catalan import PlanarForest, Tree, tree_from_dec_forest
from .interval_poset import IntervalPoset, IntervalPosetError, stat_trees, validate
from .polyalg import UNIVARIATE, Poly, binomial


class FlowError(ValueError):
    pass


class InputBelowMinusOne(FlowError):
    pass


class NegativeRate(FlowError):
    pass


class NotClosed(FlowError):
    pass


class NoSource(FlowError):
    pass


@dataclass(frozen=True)
class Flow:
    forest: PlanarForest
    inputs: tuple[int, ...]

    @cached_property
    def parents(self) -> dict:
        return self.forest.parents("preorder")

    @cached_property
    def rates(self) -> tuple[int, ...]:
        rate = list(self.inputs)
        for v in range(len(rate), 0, -1):
            p = self.parents[v]
            if p is not None:
                rate[p - 1] += rate[v - 1]
        return tuple(rate)

    @property
    def size(self) -> int:
        return len(self.inputs)

    def is_closed(self) -> bool:
        return exit_rate(self) == 0

    def __str__(self) -> str:
        from .formats import render_flow

        return render_flow(self)


class FlowStats(NamedTuple):
    exit_rate: int
    leaks: int
    rate_sum: int


def validate_flow(forest: PlanarForest, inputs: Sequence[int]) -> Flow:
    inputs = tuple(int(x) for x in inputs)
    if len(inputs) != forest.size:
        raise FlowError(f"{len(inputs)} inputs for a forest of {forest.size} nodes")
    for v, x in enumerate(inputs, 1):
        if x < -1:
            raise InputBelowMinusOne(f"node {v} has input {x}")
    flow = Flow(forest, inputs)
    for v, rate in enumerate(flow.rates, 1):
        if rate < 0:
            raise NegativeRate(f"node {v} has outgoing rate {rate}")
    return flow


def exit_rate(f: Flow) -> int:
    return sum(r for v, r in enumerate(f.rates, 1) if f.parents[v] is None)


def _subtree_flows(node: tuple, bound: int) -> dict[int, list[tuple[int, ...]]]:
    """Input vectors (preorder) of the subtree, grouped by outgoing rate ``<= bound``."""
    # a child's rate exceeds its parent's by at most one (the parent's leak)
    kids = [_subtree_flows(c, bound + 1) for c in node]
    out: dict[int, list[tuple[int, ...]]] = {}
    for choice in product(*(k.items() for k in kids)):
        total = sum(rate for rate, _ in choice)
        for rate in range(max(0, total - 1), bound + 1):
            own = (rate - total,)
            for tails in product(*(vecs for _, vecs in choice)):
                out.setdefault(rate, []).append(own + sum(tails, ()))
    return out


def enumerate_flows_with_exit(forest: PlanarForest, k: int) -> list[Flow]:
    """All flows of ``forest`` with exit rate exactly ``k``, sorted by input vector."""
    if k < 0:
        return []
    per_tree = [_subtree_flows(t, k) for t in forest.trees]
    vectors = []
    for choice in product(*(t.items() for t in per_tree)):
        if sum(rate for rate, _ in choice) != k:
            continue
        for parts in product(*(vecs for _, vecs in choice)):
            vectors.append(sum(parts, ()))
    return [Flow(forest, v) for v in sorted(vectors)]


def enumerate_closed_flows(forest: PlanarForest) -> list[Flow]:
    return enumerate_flows_with_exit(forest, 0)


def forest_to_upper_tree(forest: PlanarForest) -> Tree:
    """The binary tree whose final forest is ``forest``."""
    return tree_from_dec_forest(forest)


def _subtree_ends(parents: dict) -> list[int]:
    n = len(parents)
    end = list(range(1, n + 1))
    for v in range(n, 0, -1):
        p = parents[v]
        if p is not None:
            end[p - 1] = max(end[p - 1], end[v - 1])
    return end


def flow_to_interval_poset(f: Flow) -> IntervalPoset:
    if not f.is_closed():
        raise NotClosed(f"exit rate is {exit_rate(f)}")
    n = f.size
    end = _subtree_ends(f.parents)
    pairs = [(i, end[i - 1] + 1) for i in range(1, n) if end[i - 1] < n]
    work = list(f.inputs)
    for i in range(n, 0, -1):
        if work[i - 1] != -1:
            continue
        source = next((j for j in range(i + 1, end[i - 1] + 1) if work[j - 1] > 0), None)
        if source is None:
            raise NoSource(f"leak at {i} has no positive descendant")
        pairs.extend((j, i) for j in range(i + 1, source + 1))
        work[i - 1] = 0
        work[source - 1] -= 1
    try:
        return validate(n, pairs)
    except IntervalPosetError as exc:  # pragma: no cover - would be a bug
        raise FlowError(f"construction produced an invalid poset: {exc}") from exc


def interval_poset_to_flow(i: IntervalPoset) -> Flow:
    n = i.n
    parents = {}
    for j in range(1, n + 1):
        parents[j] = next((p for p in range(j - 1, 0, -1) if not i.precedes(p, j)), None)
    forest = PlanarForest.from_parents(n, parents, "preorder")
    inputs = [0] * n
    for v in range(1, n + 1):
        below = i.dec_descendants(v)
        if below:
            inputs[v - 1] -= 1
            inputs[below[-1] - 1] += 1
    return validate_flow(forest, inputs)


def flow_stats(f: Flow) -> FlowStats:
    rate_sum = sum(r for v, r in enumerate(f.rates, 1) if f.parents[v] is not None)
    return FlowStats(exit_rate(f), sum(1 for x in f.inputs if x == -1), rate_sum)


def rate_sets(i: IntervalPoset) -> dict[int, list[int]]:
    """For each ``a``, the decreasing predecessors of ``a`` that are maximal
    for the increasing relations among them (empty sets omitted)."""
    out = {}
    for a in range(1, i.n + 1):
        below = list(i.dec_descendants(a))
        maximal = [b for b in below if not any(b < c and i.precedes(b, c) for c in below)]
        if maximal:
            out[a] = maximal
    return out


class PosetFlowStats(NamedTuple):
    leaks: int
    rate_sum: int


def poset_flow_stats(i: IntervalPoset) -> PosetFlowStats:
    leaks = sum(1 for a in range(1, i.n) if i.precedes(a + 1, a))
    return PosetFlowStats(leaks, sum(len(s) for s in rate_sets(i).values()))


def flow_series(forest: PlanarForest) -> Poly:
    """Sum over closed flows of ``u**trees(I_f)``, with ``u = 1/(1 - t)``."""
    return Poly(
        [((stat_trees(flow_to_interval_poset(f)),), 1) for f in enumerate_closed_flows(forest)],
        UNIVARIATE,
    )


def series_coefficient(series: Poly, k: int) -> int:
    """Coefficient of ``t**k`` in a polynomial in ``u = 1/(1 - t)``."""
    total = 0
    for (r,), c in series.items():
        total += c * (binomial(k + r - 1, r - 1) if r > 0 else int(k == 0))
    return total
