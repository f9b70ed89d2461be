"""
Partitions, strict and odd partitions, shifted diagrams and their counting
formulas.

All partition types are immutable tuple subclasses, so they hash, compare and
serialize like plain tuples of integers.  Lists of partitions are always
returned in descending lexicographic order.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, NamedTuple


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        self = super().__new__(cls, parts)
        self._validate()
        return self

    def _validate(self) -> None:
        if any(p <= 0 for p in self):
            raise ValueError(f"partition parts must be positive: {tuple(self)}")
        if any(a < b for a, b in zip(self, self[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {tuple(self)}")

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicity(self, part: int) -> int:
        return sum(1 for p in self if p == part)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self)})"


class StrictPartition(Partition):
    """A partition whose parts are pairwise distinct."""

    def _validate(self) -> None:
        super()._validate()
        if any(a == b for a, b in zip(self, self[1:])):
            raise ValueError(f"strict partition parts must be distinct: {tuple(self)}")


class OddPartition(Partition):
    """A partition all of whose parts are odd."""

    def _validate(self) -> None:
        super()._validate()
        if any(p % 2 == 0 for p in self):
            raise ValueError(f"odd partition parts must be odd: {tuple(self)}")


class ShiftedCell(NamedTuple):
    """A cell of a shifted diagram, 1-based.  Row i occupies columns i .. i+λ_i-1."""

    row: int
    col: int

    @property
    def content(self) -> int:
        return self.col - self.row


EMPTY = StrictPartition(())


def sorted_parts(parts: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(parts, reverse=True))


def union(mu: Iterable[int], gamma: Iterable[int], cls=None):
    """Disjoint union of parts, reordered decreasingly (μ ∪ γ)."""
    if cls is None:
        cls = type(mu) if isinstance(mu, Partition) else Partition
    return cls(sorted_parts(list(mu) + list(gamma)))


def pad_ones(mu: Iterable[int], n: int, cls=OddPartition):
    """μ ∪ 1^{n-|μ|}."""
    mu = tuple(mu)
    k = sum(mu)
    if k > n:
        raise ValueError(f"cannot pad {mu} of size {k} to size {n}")
    return cls(mu + (1,) * (n - k))


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n, descending lexicographic."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(p) for p in _partitions(n, n)]


def enumerate_strict(n: int) -> list[StrictPartition]:
    """All strict partitions of n, descending lexicographic."""
    return [StrictPartition(p) for p in _strict(n)]


def enumerate_odd(n: int) -> list[OddPartition]:
    """All odd partitions of n, descending lexicographic."""
    return [OddPartition(p) for p in _odd(n)]


@lru_cache(maxsize=None)
def _strict(n: int) -> tuple[tuple[int, ...], ...]:
    def rec(m, bound):
        if m == 0:
            yield ()
            return
        for first in range(min(m, bound), 0, -1):
            for rest in rec(m - first, first - 1):
                yield (first,) + rest
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(rec(n, n))


@lru_cache(maxsize=None)
def _odd(n: int) -> tuple[tuple[int, ...], ...]:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(p for p in _partitions(n, n) if all(x % 2 for x in p))


def strict_up_to(n: int) -> list[StrictPartition]:
    return [lam for m in range(n + 1) for lam in enumerate_strict(m)]


def odd_up_to(n: int) -> list[OddPartition]:
    return [mu for m in range(n + 1) for mu in enumerate_odd(m)]


def length_parity(lam: Partition) -> int:
    """δ(λ) = ℓ(λ) mod 2."""
    return len(lam) % 2


def z_stat(rho: Iterable[int]) -> int:
    """Order of the centralizer of a permutation of cycle type ρ: Π i^{m_i} m_i!."""
    rho = tuple(rho)
    out = 1
    for i in set(rho):
        m = rho.count(i)
        out *= i ** m * factorial(m)
    return out


def falling_factorial(n: int, k: int) -> int:
    """n(n-1)...(n-k+1); zero when k > n >= 0."""
    return prod(range(n - k + 1, n + 1)) if k <= n else 0


def count_shifted_tableaux(lam: StrictPartition) -> int:
    """g'_λ, the number of standard shifted Young tableaux, by the product formula."""
    n = sum(lam)
    value = Fraction(factorial(n), prod(factorial(p) for p in lam))
    for i in range(len(lam)):
        for j in range(i + 1, len(lam)):
            value *= Fraction(lam[i] - lam[j], lam[i] + lam[j])
    assert value.denominator == 1
    return int(value)


def path_count(lam: StrictPartition) -> int:
    """g_λ = 2^{|λ|-ℓ(λ)} g'_λ, the number of κ-weighted paths ∅ → λ."""
    return 2 ** (sum(lam) - len(lam)) * count_shifted_tableaux(lam)


def shifted_cells(lam: StrictPartition) -> list[ShiftedCell]:
    return [ShiftedCell(i + 1, i + 1 + j) for i, part in enumerate(lam) for j in range(part)]


def iter_shifted_tableaux(lam: StrictPartition) -> Iterator[dict[ShiftedCell, int]]:
    """Every standard filling of the shifted diagram (brute force, small shapes only)."""
    cells = set(shifted_cells(lam))
    n = len(cells)

    def rec(filled: dict, k: int):
        if k > n:
            yield dict(filled)
            return
        for cell in sorted(cells - filled.keys()):
            left = ShiftedCell(cell.row, cell.col - 1)
            up = ShiftedCell(cell.row - 1, cell.col)
            if (left in cells and left not in filled) or (up in cells and up not in filled):
                continue
            filled[cell] = k
            yield from rec(filled, k + 1)
            del filled[cell]

    yield from rec({}, 1)


def contains(lam: Iterable[int], nu: Iterable[int]) -> bool:
    """ν ⊆ λ, i.e. ν_i <= λ_i for all i."""
    lam, nu = tuple(lam), tuple(nu)
    if len(nu) > len(lam):
        return False
    return all(a <= b for a, b in zip(nu, lam))


def addable_cells(lam: StrictPartition) -> list[ShiftedCell]:
    """Cells whose addition to S(λ) gives another shifted strict diagram."""
    out = []
    for i, part in enumerate(lam):
        if i == 0 or lam[i - 1] > part + 1:
            out.append(ShiftedCell(i + 1, i + 1 + part))
    ell = len(lam)
    if ell == 0 or lam[-1] > 1:
        out.append(ShiftedCell(ell + 1, ell + 1))
    return out


def removable_cells(lam: StrictPartition) -> list[ShiftedCell]:
    """Cells whose removal from S(λ) gives another shifted strict diagram."""
    out = []
    for i, part in enumerate(lam):
        if i == len(lam) - 1 or part - 1 > lam[i + 1]:
            out.append(ShiftedCell(i + 1, i + part))
    return out


def kerov_coordinates(lam: StrictPartition) -> tuple[frozenset[int], frozenset[int]]:
    """(addable contents, removable contents) of the shifted diagram."""
    up = frozenset(c.content for c in addable_cells(lam))
    down = frozenset(c.content for c in removable_cells(lam))
    return up, down


def _with_cell(lam: StrictPartition, cell: ShiftedCell, delta: int) -> StrictPartition:
    parts = list(lam)
    r = cell.row - 1
    if r == len(parts):
        parts.append(0)
    parts[r] += delta
    return StrictPartition(p for p in parts if p > 0)


def add_cell(lam: StrictPartition, content: int) -> StrictPartition:
    """λ + □(x): add the addable cell of the given content."""
    for cell in addable_cells(lam):
        if cell.content == content:
            return _with_cell(lam, cell, +1)
    raise ValueError(f"no addable cell of content {content} in {tuple(lam)}")


def remove_cell(lam: StrictPartition, content: int) -> StrictPartition:
    """λ - □(y): remove the removable cell of the given content."""
    for cell in removable_cells(lam):
        if cell.content == content:
            return _with_cell(lam, cell, -1)
    raise ValueError(f"no removable cell of content {content} in {tuple(lam)}")


def parse_partition(text: str, cls=Partition):
    """Parse '3,1' or '[3,1]' or '' into a partition of the given class."""
    text = text.strip().strip("[]() ")
    if not text:
        return cls(())
    return cls(sorted_parts(int(x) for x in text.split(",") if x.strip()))


def canonical_key(parts: Iterable[int]) -> tuple:
    """Sort key for mixed-size collections: larger size first, then descending lexicographic."""
    parts = tuple(parts)
    return (-sum(parts), tuple(-p for p in parts), len(parts))


def canonical_sorted(items: Iterable) -> list:
    return sorted(items, key=canonical_key)
