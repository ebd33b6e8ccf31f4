"""Exact invariants of zero-dimensional monomial ideals.

Log canonical threshold, Lojasiewicz exponent, Samuel and mixed
multiplicities, higher Lelong numbers, plus an independent colength oracle
(staircase counting / finite differences) used to cross-check the
convex-geometric route.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exactgeom import (
    InvalidInputError,
    MonomialIdeal,
    NotZeroDimensionalError,
    axis_intercepts,
    covolume,
    diagonal_intercept,
    ideal_product,
    maximal_ideal,
    polyhedron_of,
)


class UnitIdealError(ValueError):
    """The unit ideal: lct is +infinity, reported as a status, not a number."""


class OracleBudgetExceededError(RuntimeError):
    pass


@dataclass(frozen=True)
class LelongVector:
    """Higher Lelong numbers e_1..e_n of log|a|; e_0 := 1 by convention."""

    e: tuple[Fraction, ...]

    @property
    def e0(self) -> Fraction:
        return Fraction(1)

    def __getitem__(self, k: int) -> Fraction:
        if k == 0:
            return self.e0
        return self.e[k - 1]


@dataclass(frozen=True)
class MixedMass:
    value: Fraction
    arguments: tuple[MonomialIdeal, ...]


def _require_zero_dim(a: MonomialIdeal, what: str) -> None:
    if not a.zero_dimensional:
        raise NotZeroDimensionalError(f"{what} requires a zero-dimensional ideal")


def lct_monomial(a: MonomialIdeal) -> Fraction:
    """1 / (diagonal intercept of the Newton polyhedron)."""
    if a.is_unit:
        raise UnitIdealError("lct of the unit ideal is +infinity")
    t0 = diagonal_intercept(polyhedron_of(a))
    return 1 / t0


def loja_monomial(a: MonomialIdeal) -> Fraction:
    """Max axis intercept, cross-checked against the dual weight program."""
    _require_zero_dim(a, "Lojasiewicz exponent")
    P = polyhedron_of(a)
    primal = max(t for t in axis_intercepts(P))
    # dual: sup over weights w >= 0 with min_i w_i = 1 of min_g <v, w>;
    # the optimum lies on a normal-fan ray, i.e. a facet normal rescaled.
    dual = max(Fraction(c, min(w)) for w, c in P.facets)
    if primal != dual:
        raise ArithmeticError(f"Lojasiewicz primal/dual mismatch: {primal} vs {dual}")
    return primal


def _staircase_box(a: MonomialIdeal) -> tuple[int, ...]:
    box = []
    for i in range(a.dim):
        p = a.pure_power(i)
        if p is None:
            raise NotZeroDimensionalError("colength requires pure powers on all axes")
        box.append(p)
    return tuple(box)


def colength(a: MonomialIdeal) -> int:
    """Number of standard monomials (lattice points outside every v+orthant)."""
    box = _staircase_box(a)
    if any(b == 0 for b in box):
        return 0
    grid = np.zeros(box, dtype=bool)
    for g in a.generators:
        if all(gi < bi for gi, bi in zip(g, box)):
            grid[tuple(slice(gi, None) for gi in g)] = True
    return int((~grid).sum())


def multiplicity_oracle(a: MonomialIdeal, budget: int = 64) -> int:
    """n-th finite difference of colength(a^k), stabilized by doubling k0."""
    _require_zero_dim(a, "multiplicity oracle")
    n = a.dim
    powers: dict[int, MonomialIdeal] = {1: a}

    def power(k: int) -> MonomialIdeal:
        if k not in powers:
            powers[k] = ideal_product(power(k - 1), a)
        return powers[k]

    k0 = n + 1
    while k0 <= budget:
        vals = [colength(power(k)) for k in range(k0, k0 + n + 2)]
        diffs = vals
        for _ in range(n):
            diffs = [b - a_ for a_, b in zip(diffs, diffs[1:])]
        if diffs[0] == diffs[1]:
            return diffs[0]
        k0 *= 2
    raise OracleBudgetExceededError(f"no stable finite difference up to k0={budget}")


def samuel_multiplicity(a: MonomialIdeal) -> Fraction:
    """n! * covolume of the Newton polyhedron."""
    _require_zero_dim(a, "Samuel multiplicity")
    n = a.dim
    import math

    return math.factorial(n) * covolume(polyhedron_of(a))


def mixed_multiplicity(ideals) -> MixedMass:
    """Polarization of covolumes over Minkowski sums of the arguments."""
    ideals = tuple(ideals)
    if not ideals:
        raise InvalidInputError("no ideals given")
    n = ideals[0].dim
    if len(ideals) != n:
        raise InvalidInputError(f"need exactly {n} ideals in dimension {n}")
    for a in ideals:
        if a.dim != n:
            raise InvalidInputError("dimension mismatch among mixed arguments")
        _require_zero_dim(a, "mixed multiplicity")
    total = Fraction(0)
    for size in range(1, n + 1):
        sign = (-1) ** (n - size)
        for subset in itertools.combinations(range(n), size):
            acc = ideals[subset[0]]
            for i in subset[1:]:
                acc = ideal_product(acc, ideals[i])
            total += sign * covolume(polyhedron_of(acc))
    return MixedMass(total, ideals)


def lelong_numbers(a: MonomialIdeal) -> LelongVector:
    """e_k = mixed mass of a taken k times against the maximal ideal."""
    _require_zero_dim(a, "Lelong numbers")
    n = a.dim
    m = maximal_ideal(n)
    e = []
    for k in range(1, n):
        e.append(mixed_multiplicity([a] * k + [m] * (n - k)).value)
    e.append(samuel_multiplicity(a))
    if e[0] != a.min_degree:
        raise ArithmeticError(
            f"e_1 = {e[0]} differs from minimal generator degree {a.min_degree}")
    if any(ek <= 0 for ek in e):
        raise ArithmeticError(f"non-positive Lelong number in {e}")
    return LelongVector(tuple(e))


def dh_lower_bound(a: MonomialIdeal) -> Fraction:
    """Sum of consecutive Lelong-number ratios e_{k-1}/e_k, with e_0 = 1."""
    lv = lelong_numbers(a)
    n = a.dim
    return sum((lv[k - 1] / lv[k] for k in range(1, n + 1)), Fraction(0))
