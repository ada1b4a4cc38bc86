"""Exhaustive generation of interval-posets and identity checks at small sizes."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .catalan import enumerate_forests, enumerate_trees
from .decomposition import beta, beta_inverse, lc_compose
from .flows import (
    enumerate_closed_flows,
    enumerate_flows_with_exit,
    flow_series,
    forest_to_upper_tree,
    series_coefficient,
)
from .interval_poset import IntervalPoset, stat_ir, stat_trees, tamari_leq
from .polyalg import Poly, binomial


class NonIntegerResult(ArithmeticError):
    pass


@dataclass(frozen=True)
class SizeReport:
    n: int
    enumerated: int
    formula: int

    @property
    def match(self) -> bool:
        return self.enumerated == self.formula


@lru_cache(maxsize=None)
def _posets(n: int) -> tuple[IntervalPoset, ...]:
    if n == 0:
        return (IntervalPoset.empty(),)
    out = []
    for n1 in range(n):
        for i1 in _posets(n1):
            for i2 in _posets(n - 1 - n1):
                for r in range(stat_trees(i2) + 1):
                    out.append(lc_compose(i1, i2, r))
    return tuple(out)


def enumerate_interval_posets(n: int) -> tuple[IntervalPoset, ...]:
    """Every interval-poset of size ``n`` once, via the lower-contacts recursion."""
    if n < 0:
        raise ValueError("size must be nonnegative")
    return _posets(n)


def count_formula(n: int) -> int:
    """``2 / (n (n + 1)) * C(4n + 1, n - 1)``, computed exactly."""
    if n < 1:
        raise ValueError("the formula needs n >= 1")
    q, rem = divmod(2 * binomial(4 * n + 1, n - 1), n * (n + 1))
    if rem:
        raise NonIntegerResult(f"formula is not an integer at n={n}")
    return q


def size_report(n: int) -> SizeReport:
    return SizeReport(n, len(enumerate_interval_posets(n)), count_formula(n))


def phi(max_n: int) -> Poly:
    """Sum of ``y^size x^trees z^ir`` over all interval-posets of size ``<= max_n``."""
    terms = []
    for n in range(max_n + 1):
        for i in enumerate_interval_posets(n):
            terms.append(((n, stat_trees(i), stat_ir(i)), 1))
    return Poly(terms)


def check_symmetry(max_n: int) -> bool:
    p = phi(max_n)
    return p == p.swap("x", "z")


def check_functional_equations(max_n: int) -> tuple[bool, bool]:
    """Both functional equations for the (trees, ir) generating function,
    compared coefficient-wise up to ``y**max_n``.

    The right-hand sides only use coefficients of lower ``y``-degree, so a
    truncation at ``max_n`` determines them exactly up to that degree.
    """
    f = phi(max_n)
    x, y = Poly.var("x"), Poly.var("y")
    xyz = Poly.monomial(y=1, x=1, z=1)
    f_x1 = f.substitute_one("z")
    f_1z = f.substitute_one("x")
    f_11 = f_x1.substitute_one("x")

    def cut(p: Poly) -> Poly:
        return p.truncate("y", max_n)

    diff_z = (x * f - f_1z).div_var_minus_one("x")
    diff_1 = (x * f_x1 - f_11).div_var_minus_one("x")

    rhs_product = 1 + cut(cut(xyz * f_x1) * diff_z)
    rhs_sum = 1 + cut(xyz * diff_z) + cut(cut(x * y * (f - 1)) * diff_1)
    return cut(rhs_product) == f, cut(rhs_sum) == f


@dataclass(frozen=True)
class InvolutionReport:
    n: int
    count: int
    involution: bool
    ir_lc_is_beta: bool


def check_beta_involution(max_n: int) -> list[InvolutionReport]:
    """Per size: is ``beta(beta(I)) == I``, and does IR-decomposing then
    LC-recomposing (``beta_inverse``) agree with ``beta``?"""
    out = []
    for n in range(max_n + 1):
        posets = enumerate_interval_posets(n)
        out.append(
            InvolutionReport(
                n,
                len(posets),
                all(beta(beta(i)) == i for i in posets),
                all(beta_inverse(i) == beta(i) for i in posets),
            )
        )
    return out


@dataclass(frozen=True)
class BetaReport:
    n: int
    count: int
    size_preserved: bool
    stats_swapped: bool
    injective: bool
    inverse_ok: bool

    @property
    def ok(self) -> bool:
        return self.size_preserved and self.stats_swapped and self.injective and self.inverse_ok


def check_beta_contract(max_n: int) -> list[BetaReport]:
    out = []
    for n in range(max_n + 1):
        posets = enumerate_interval_posets(n)
        images = [beta(i) for i in posets]
        out.append(
            BetaReport(
                n,
                len(posets),
                all(j.n == n for j in images),
                all(
                    (stat_trees(j), stat_ir(j)) == (stat_ir(i), stat_trees(i))
                    for i, j in zip(posets, images)
                ),
                len(set(images)) == len(images),
                all(beta_inverse(j) == i for i, j in zip(posets, images)),
            )
        )
    return out


@dataclass(frozen=True)
class FlowTheoremRow:
    forest: str
    closed_flows: int
    ideal_size: int

    @property
    def match(self) -> bool:
        return self.closed_flows == self.ideal_size


def flow_theorem_rows(max_forest_size: int) -> list[FlowTheoremRow]:
    rows = []
    for k in range(1, max_forest_size + 1):
        trees = enumerate_trees(k)
        for forest in enumerate_forests(k):
            top = forest_to_upper_tree(forest)
            ideal = sum(1 for t in trees if tamari_leq(t, top))
            rows.append(FlowTheoremRow(str(forest), len(enumerate_closed_flows(forest)), ideal))
    return rows


def check_flow_theorem(max_forest_size: int) -> bool:
    """Closed flows of every forest vs. the Tamari ideal below its tree."""
    return all(row.match for row in flow_theorem_rows(max_forest_size))


def check_open_flow_series(max_forest_size: int, max_k: int) -> bool:
    """Brute-force flow counts by exit rate vs. the ``u = 1/(1-t)`` expansion
    of the closed-flow series."""
    for size in range(1, max_forest_size + 1):
        for forest in enumerate_forests(size):
            series = flow_series(forest)
            for k in range(max_k + 1):
                if len(enumerate_flows_with_exit(forest, k)) != series_coefficient(series, k):
                    return False
    return True
