"""Exact rational linear algebra on top of sympy's DomainMatrix over QQ."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


class SingularSystemError(ArithmeticError):
    """Raised when an exact solve has no unique solution."""


def _to_qq(x) -> object:
    x = Fraction(x)
    return QQ(x.numerator, x.denominator)


def _to_fraction(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


def to_domain(rows: Sequence[Sequence]) -> DomainMatrix:
    rows = [[_to_qq(x) for x in row] for row in rows]
    ncols = len(rows[0]) if rows else 0
    return DomainMatrix(rows, (len(rows), ncols), QQ)


def from_domain(m: DomainMatrix) -> list[list[Fraction]]:
    return [[_to_fraction(x) for x in row] for row in m.to_list()]


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    return to_domain(rows).rank()


def solve(rows: Sequence[Sequence], rhs: Sequence[Sequence]) -> list[list[Fraction]]:
    """Solve A X = B exactly; A may be tall but must have full column rank and B must be consistent.

    `rhs` is a list of right-hand-side columns given row-wise (len(rows) x k).
    """
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    k = len(rhs[0]) if rhs else 0
    aug = to_domain([list(r) + list(b) for r, b in zip(rows, rhs)])
    red, pivots = aug.rref()
    if any(p >= ncols for p in pivots):
        raise SingularSystemError("inconsistent linear system")
    if len(pivots) < ncols:
        raise SingularSystemError(f"rank deficient system: rank {len(pivots)} < {ncols} unknowns")
    red = red.to_list()
    return [[_to_fraction(red[i][ncols + j]) for j in range(k)] for i in range(ncols)]


def inverse(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(rows)
    ident = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    return solve(rows, ident)
