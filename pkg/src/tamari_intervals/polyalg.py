"""Sparse polynomials with exact integer coefficients.

A :class:`Poly` is a finite map from exponent tuples to nonzero Python ints
over a fixed tuple of variable names.  Generating functions of intervals live
in ``TRIVARIATE = ("y", "x", "z")`` (size, trees, initial rise) and flow series
live in ``("u",)`` where ``u`` stands for ``1/(1 - t)``.
"""

from __future__ import annotations

from collections import defaultdict
from itertools import product
from typing import Iterable, Mapping

TRIVARIATE = ("y", "x", "z")
UNIVARIATE = ("u",)


class NotDivisible(ArithmeticError):
    """Raised when an exact division by ``(v - 1)`` leaves a remainder."""


class Poly:
    __slots__ = ("variables", "_terms")

    def __init__(
        self,
        terms: Mapping[tuple[int, ...], int] | Iterable[tuple[tuple[int, ...], int]] = (),
        variables: tuple[str, ...] = TRIVARIATE,
    ):
        self.variables = tuple(variables)
        acc: dict[tuple[int, ...], int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != len(self.variables):
                raise ValueError(f"exponent {exps} does not match variables {self.variables}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            acc[exps] += int(coeff)
        self._terms = {e: c for e, c in acc.items() if c != 0}

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, c: int, variables: tuple[str, ...] = TRIVARIATE) -> Poly:
        return cls({(0,) * len(variables): c}, variables)

    @classmethod
    def monomial(cls, coeff: int = 1, variables: tuple[str, ...] = TRIVARIATE, **exps: int) -> Poly:
        """``Poly.monomial(2, x=1, z=3)`` is ``2*x*z^3``."""
        unknown = set(exps) - set(variables)
        if unknown:
            raise ValueError(f"unknown variable(s) {sorted(unknown)}")
        return cls({tuple(exps.get(v, 0) for v in variables): coeff}, variables)

    @classmethod
    def var(cls, name: str, variables: tuple[str, ...] = TRIVARIATE) -> Poly:
        return cls.monomial(1, variables, **{name: 1})

    # -- access -------------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._terms)

    def coeff(self, *exps: int) -> int:
        return self._terms.get(tuple(exps), 0)

    def items(self):
        """Terms in canonical (lexicographic exponent) order."""
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self, var: str) -> int:
        i = self._index(var)
        return max((e[i] for e in self._terms), default=-1)

    def _index(self, var: str) -> int:
        try:
            return self.variables.index(var)
        except ValueError:
            raise ValueError(f"unknown variable {var!r}; have {self.variables}") from None

    def _check(self, other: Poly) -> None:
        if self.variables != other.variables:
            raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")

    def _lift(self, other) -> Poly:
        if isinstance(other, int):
            return Poly.constant(other, self.variables)
        if isinstance(other, Poly):
            self._check(other)
            return other
        return NotImplemented

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> Poly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return Poly(acc, self.variables)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly({e: -c for e, c in self._terms.items()}, self.variables)

    def __sub__(self, other) -> Poly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        acc: dict[tuple[int, ...], int] = defaultdict(int)
        for (e1, c1), (e2, c2) in product(self._terms.items(), other._terms.items()):
            acc[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return Poly(acc, self.variables)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly.constant(other, self.variables)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.variables == other.variables and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.variables, frozenset(self._terms.items())))

    # -- transformations ----------------------------------------------------

    def substitute_one(self, var: str) -> Poly:
        """Set ``var`` to 1 and merge like terms."""
        i = self._index(var)
        acc: dict[tuple[int, ...], int] = defaultdict(int)
        for e, c in self._terms.items():
            acc[e[:i] + (0,) + e[i + 1:]] += c
        return Poly(acc, self.variables)

    def swap(self, a: str, b: str) -> Poly:
        i, j = self._index(a), self._index(b)
        out = {}
        for e, c in self._terms.items():
            e = list(e)
            e[i], e[j] = e[j], e[i]
            out[tuple(e)] = c
        return Poly(out, self.variables)

    def truncate(self, var: str, max_degree: int) -> Poly:
        """Drop every term whose ``var`` exponent exceeds ``max_degree``."""
        i = self._index(var)
        return Poly({e: c for e, c in self._terms.items() if e[i] <= max_degree}, self.variables)

    def layer(self, var: str, degree: int) -> Poly:
        """The coefficient of ``var**degree``, as a polynomial without ``var``."""
        i = self._index(var)
        return Poly(
            {e[:i] + (0,) + e[i + 1:]: c for e, c in self._terms.items() if e[i] == degree},
            self.variables,
        )

    def div_var_minus_one(self, var: str = "x") -> Poly:
        """Exact quotient by ``(var - 1)``.

        Synthetic division along ``var`` for each slice of the remaining
        exponents.  Raises :class:`NotDivisible` if the polynomial does not
        vanish at ``var = 1``.
        """
        i = self._index(var)
        slices: dict[tuple[int, ...], dict[int, int]] = defaultdict(dict)
        for e, c in self._terms.items():
            slices[e[:i] + e[i + 1:]][e[i]] = c
        out: dict[tuple[int, ...], int] = {}
        for rest, coeffs in slices.items():
            # p = sum a_d v^d;  q_{d-1} = a_d + q_d  running down from the top.
            top = max(coeffs)
            carry = 0
            for d in range(top, 0, -1):
                carry += coeffs.get(d, 0)
                if carry:
                    out[rest[:i] + (d - 1,) + rest[i:]] = carry
            if carry + coeffs.get(0, 0) != 0:
                raise NotDivisible(f"nonzero remainder {carry + coeffs.get(0, 0)} at {var}=1")
        return Poly(out, self.variables)

    def evaluate(self, **values: int) -> int:
        missing = set(self.variables) - set(values)
        if missing:
            raise ValueError(f"missing values for {sorted(missing)}")
        total = 0
        for e, c in self._terms.items():
            term = c
            for v, k in zip(self.variables, e):
                term *= values[v] ** k
            total += term
        return total

    # -- text -----------------------------------------------------------------

    def render(self) -> str:
        """``<coeff>*y^a*x^b*z^c`` terms joined by `` + `` in lexicographic order."""
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            factors = [str(c)]
            for v, k in zip(self.variables, e):
                if k == 1:
                    factors.append(v)
                elif k > 1:
                    factors.append(f"{v}^{k}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Poly({self.render()!r}, variables={self.variables})"


def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_substitute_one(p: Poly, var: str) -> Poly:
    if var not in ("x", "z"):
        raise ValueError(f"can only substitute x or z, not {var!r}")
    return p.substitute_one(var)


def poly_div_x_minus_1(p: Poly) -> Poly:
    return p.div_var_minus_one("x")


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient; zero outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    k = min(k, n - k)
    num = 1
    for i in range(k):
        # product of i+1 consecutive integers is divisible by (i+1)!
        num = num * (n - i) // (i + 1)
    return num
