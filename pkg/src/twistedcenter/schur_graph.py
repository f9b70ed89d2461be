"""
Edge multiplicities, Markov kernels and Plancherel measures on the Schur graph,
and the up/down moments built from them.

Kernels are computed per query; per-partition values are memoized.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .partitions import (
    EMPTY,
    StrictPartition,
    add_cell,
    enumerate_strict,
    kerov_coordinates,
    path_count,
    remove_cell,
)


@dataclass(frozen=True)
class TransitionRow:
    source: StrictPartition
    targets: dict = field(default_factory=dict)

    def total(self) -> Fraction:
        return sum(self.targets.values(), Fraction(0))


def edge_multiplicity(nu: StrictPartition, lam: StrictPartition) -> int:
    """κ(ν, λ): 2 if λ = ν + □ with the same length, 1 if the length grows, else 0."""
    if sum(lam) != sum(nu) + 1 or len(lam) - len(nu) not in (0, 1):
        return 0
    padded = tuple(nu) + (0,) * (len(lam) - len(nu))
    diffs = [b - a for a, b in zip(padded, lam)]
    if sorted(diffs) != [0] * (len(diffs) - 1) + [1]:
        return 0
    return 2 if len(lam) == len(nu) else 1


def s(i: int) -> int:
    """Eigenvalue label i(i+1) attached to content i."""
    return i * (i + 1)


@lru_cache(maxsize=None)
def _g(lam: StrictPartition) -> int:
    return path_count(lam)


def path_count_dp(lam: StrictPartition) -> int:
    """Number of paths ∅ → λ counted with edge multiplicity (independent of the product formula)."""
    return _path_dp(StrictPartition(lam))


@lru_cache(maxsize=None)
def _path_dp(lam: StrictPartition) -> int:
    if not lam:
        return 1
    _, down = kerov_coordinates(lam)
    total = 0
    for y in down:
        nu = remove_cell(lam, y)
        total += edge_multiplicity(nu, lam) * _path_dp(nu)
    return total


def down_transition(lam: StrictPartition, nu: StrictPartition) -> Fraction:
    """p↓(λ, ν) = g_ν / g_λ · κ(ν, λ)."""
    if not lam:
        raise ValueError("down transition needs |λ| >= 1")
    k = edge_multiplicity(nu, lam)
    if k == 0:
        return Fraction(0)
    return Fraction(_g(StrictPartition(nu)) * k, _g(StrictPartition(lam)))


def up_transition(nu: StrictPartition, lam: StrictPartition) -> Fraction:
    """p↑(ν, λ) = g_λ / (g_ν (|ν|+1)) on edges, else 0."""
    if edge_multiplicity(nu, lam) == 0:
        return Fraction(0)
    return Fraction(_g(StrictPartition(lam)), _g(StrictPartition(nu)) * (sum(nu) + 1))


def down_row(lam: StrictPartition) -> TransitionRow:
    lam = StrictPartition(lam)
    _, down = kerov_coordinates(lam)
    targets = {}
    for y in sorted(down, reverse=True):
        nu = remove_cell(lam, y)
        targets[nu] = down_transition(lam, nu)
    return TransitionRow(lam, dict(sorted(targets.items(), reverse=True)))


def up_row(nu: StrictPartition) -> TransitionRow:
    nu = StrictPartition(nu)
    up, _ = kerov_coordinates(nu)
    targets = {}
    for x in up:
        lam = add_cell(nu, x)
        targets[lam] = up_transition(nu, lam)
    return TransitionRow(nu, dict(sorted(targets.items(), reverse=True)))


def plancherel(n: int) -> dict[StrictPartition, Fraction]:
    """Pl_n(λ) = 2^{ℓ(λ)-n} g_λ² / n! on SP_n."""
    out = {}
    for lam in enumerate_strict(n):
        out[lam] = Fraction(2) ** (len(lam) - n) * _g(lam) ** 2 / factorial(n)
    return out


@lru_cache(maxsize=None)
def _up_moment(k: int, lam: StrictPartition) -> Fraction:
    up, _ = kerov_coordinates(lam)
    total = Fraction(0)
    for x in up:
        total += up_transition(lam, add_cell(lam, x)) * s(x) ** k
    return total


@lru_cache(maxsize=None)
def _down_moment(k: int, lam: StrictPartition) -> Fraction:
    if not lam:
        return Fraction(0)
    _, down = kerov_coordinates(lam)
    total = Fraction(0)
    for y in down:
        total += down_transition(lam, remove_cell(lam, y)) * s(y) ** (k - 1)
    return 2 * sum(lam) * total


def up_moment(k: int, lam: StrictPartition) -> Fraction:
    """Moment of s(x)^k under the up kernel out of λ; identically 1 for k = 0."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _up_moment(k, StrictPartition(lam))


def down_moment(k: int, lam: StrictPartition) -> Fraction:
    """2|λ| · moment of s(y)^{k-1} under the down kernel out of λ; indexed from k = 1."""
    if k < 1:
        raise ValueError("down moments are indexed from k = 1")
    return _down_moment(k, StrictPartition(lam))


__all__ = [
    "EMPTY",
    "TransitionRow",
    "edge_multiplicity",
    "s",
    "path_count_dp",
    "down_transition",
    "up_transition",
    "down_row",
    "up_row",
    "plancherel",
    "up_moment",
    "down_moment",
]
