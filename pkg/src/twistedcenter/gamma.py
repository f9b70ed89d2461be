"""
The algebra Γ = Q[p_1, p_3, p_5, ...] of symmetric functions generated by odd
power sums.

Elements are stored in the p-basis.  On top of that we build the Schur
Q-functions Q_λ, the matrix X relating p_μ and Q_λ (hence the spin characters
χ^λ(μ)), the inhomogeneous power sums 𝔭_μ and the factorial Schur
Q-functions Q*_λ.  Everything is exact over the rationals.

𝔭_μ and the Schur-graph moments are obtained by interpolation: an element of
Γ of degree ≤ d is determined by its values on strict partitions, so we solve
for its p-coordinates from values on all strict λ with |λ| ≤ d + B.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Callable, Iterable, Mapping

from . import cache
from .linalg import SingularSystemError, rank, solve
from .partitions import (
    OddPartition,
    StrictPartition,
    canonical_sorted,
    enumerate_odd,
    enumerate_strict,
    falling_factorial,
    length_parity,
    odd_up_to,
    pad_ones,
    sorted_parts,
    strict_up_to,
    z_stat,
)
from .serialization import pair_key, parse_pair_key


class GammaElement:
    """An element of Γ, stored as {odd partition μ: coefficient of p_μ}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping | None = None):
        clean = {}
        for mu, c in (coeffs or {}).items():
            c = Fraction(c)
            if c:
                key = OddPartition(sorted_parts(mu))
                clean[key] = clean.get(key, Fraction(0)) + c
        self.coeffs = {k: v for k, v in clean.items() if v}

    @classmethod
    def p(cls, mu: Iterable[int] = ()) -> "GammaElement":
        return cls({OddPartition(sorted_parts(mu)): 1})

    @classmethod
    def scalar(cls, c) -> "GammaElement":
        return cls({OddPartition(()): c})

    def degree(self) -> int:
        """Max |μ| over the support; -1 for the zero element."""
        return max((sum(mu) for mu in self.coeffs), default=-1)

    def homogeneous(self, d: int) -> "GammaElement":
        return GammaElement({mu: c for mu, c in self.coeffs.items() if sum(mu) == d})

    def top(self) -> "GammaElement":
        return self.homogeneous(self.degree())

    def evaluate(self, lam: Iterable[int]) -> Fraction:
        return evaluate(self, lam)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = GammaElement.scalar(other)
        if not isinstance(other, GammaElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other) -> "GammaElement":
        if isinstance(other, (int, Fraction)):
            other = GammaElement.scalar(other)
        out = dict(self.coeffs)
        for mu, c in other.coeffs.items():
            out[mu] = out.get(mu, Fraction(0)) + c
        return GammaElement(out)

    __radd__ = __add__

    def __neg__(self) -> "GammaElement":
        return GammaElement({mu: -c for mu, c in self.coeffs.items()})

    def __sub__(self, other) -> "GammaElement":
        if isinstance(other, (int, Fraction)):
            other = GammaElement.scalar(other)
        return self + (-other)

    def __rsub__(self, other) -> "GammaElement":
        return (-self) + other

    def __mul__(self, other) -> "GammaElement":
        if isinstance(other, (int, Fraction)):
            return GammaElement({mu: c * other for mu, c in self.coeffs.items()})
        if not isinstance(other, GammaElement):
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other) -> "GammaElement":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> "GammaElement":
        out = GammaElement.scalar(1)
        for _ in range(k):
            out = out * self
        return out

    def items(self):
        """(μ, coefficient) pairs in canonical partition order."""
        return [(mu, self.coeffs[mu]) for mu in canonical_sorted(self.coeffs)]

    def __repr__(self) -> str:
        if not self.coeffs:
            return "GammaElement(0)"
        terms = [f"{c} p{list(mu)}" for mu, c in self.items()]
        return "GammaElement(" + " + ".join(terms) + ")"


def multiply(f: GammaElement, g: GammaElement) -> GammaElement:
    """Bilinear product, p_μ · p_γ = p_{μ∪γ}."""
    out: dict = {}
    for mu, a in f.coeffs.items():
        for gamma, b in g.coeffs.items():
            key = sorted_parts(mu + gamma)
            out[key] = out.get(key, Fraction(0)) + a * b
    return GammaElement(out)


@lru_cache(maxsize=None)
def _monomial_value(mu: tuple, lam: tuple) -> int:
    out = 1
    for k in mu:
        out *= sum(x ** k for x in lam)
    return out


def evaluate(f: GammaElement, lam: Iterable[int]) -> Fraction:
    """f(λ): substitute p_k(λ) = Σ_i λ_i^k."""
    lam = tuple(lam)
    return sum((c * _monomial_value(tuple(mu), lam) for mu, c in f.coeffs.items()), Fraction(0))


# Schur Q-functions --------------------------------------------------------


@lru_cache(maxsize=None)
def q_series(r: int) -> GammaElement:
    """q_r, the coefficient of t^r in exp(2 Σ_{k odd} p_k t^k / k)."""
    if r < 0:
        return GammaElement()
    if r == 0:
        return GammaElement.scalar(1)
    out = GammaElement()
    for k in range(1, r + 1, 2):
        out = out + GammaElement.p((k,)) * q_series(r - k) * 2
    return out * Fraction(1, r)


@lru_cache(maxsize=None)
def _two_row(r: int, s: int) -> GammaElement:
    """Q_{(r,s)} = q_r q_s + 2 Σ_{i=1}^s (-1)^i q_{r+i} q_{s-i}; antisymmetric in (r, s)."""
    out = q_series(r) * q_series(s)
    for i in range(1, s + 1):
        out = out + q_series(r + i) * q_series(s - i) * (2 * (-1) ** i)
    return out


def _pfaffian(parts: tuple) -> GammaElement:
    if not parts:
        return GammaElement.scalar(1)
    first, rest = parts[0], parts[1:]
    out = GammaElement()
    for j, other in enumerate(rest):
        sign = -1 if j % 2 else 1
        minor = rest[:j] + rest[j + 1:]
        out = out + _two_row(first, other) * _schur_q(minor) * sign
    return out


@lru_cache(maxsize=None)
def _schur_q(parts: tuple) -> GammaElement:
    if len(parts) == 1:
        return q_series(parts[0])
    if len(parts) % 2:
        parts = parts + (0,)
    return _pfaffian(parts)


def schur_q(lam: Iterable[int]) -> GammaElement:
    """Q_λ as the Pfaffian of the two-row functions Q_{(λ_i, λ_j)}."""
    lam = StrictPartition(sorted_parts(lam))
    return _schur_q(tuple(lam))


# The X matrix and characters -----------------------------------------------


@dataclass(frozen=True)
class CharacterMatrix:
    """X_μ^λ for μ ∈ OP_n, λ ∈ SP_n, with p_μ = Σ_λ 2^{-ℓ(λ)} X_μ^λ Q_λ."""

    n: int
    entries: dict

    @property
    def rows(self) -> list[OddPartition]:
        return enumerate_odd(self.n)

    @property
    def cols(self) -> list[StrictPartition]:
        return enumerate_strict(self.n)

    def __getitem__(self, key) -> Fraction:
        mu, lam = key
        return self.entries[(OddPartition(mu), StrictPartition(lam))]

    def as_rows(self) -> list[list[Fraction]]:
        return [[self.entries[(mu, lam)] for lam in self.cols] for mu in self.rows]

    def to_json(self) -> dict:
        return {pair_key(mu, lam): str(self.entries[(mu, lam)]) for mu in self.rows for lam in self.cols}

    @classmethod
    def from_json(cls, n: int, data: dict) -> "CharacterMatrix":
        entries = {}
        for key, value in data.items():
            mu, lam = parse_pair_key(key)
            entries[(OddPartition(mu), StrictPartition(lam))] = Fraction(value)
        return cls(n, entries)


def q_matrix(n: int) -> list[list[Fraction]]:
    """Rows λ ∈ SP_n, columns μ ∈ OP_n: p-coordinates of Q_λ."""
    odd = enumerate_odd(n)
    return [[schur_q(lam).coeffs.get(mu, Fraction(0)) for mu in odd] for lam in enumerate_strict(n)]


def check_x_matrix(x: CharacterMatrix) -> bool:
    """Both defining relations: p_μ = Σ 2^{-ℓ(λ)} X Q_λ and Q_λ = Σ (2^{ℓ(μ)}/z_μ) X p_μ."""
    for mu in x.rows:
        total = GammaElement()
        for lam in x.cols:
            total = total + schur_q(lam) * (x[mu, lam] / 2 ** len(lam))
        if total != GammaElement.p(mu):
            return False
    for lam in x.cols:
        total = GammaElement({mu: Fraction(2 ** len(mu), z_stat(mu)) * x[mu, lam] for mu in x.rows})
        if total != schur_q(lam):
            return False
    return True


def _compute_x_matrix(n: int) -> CharacterMatrix:
    odd, strict = enumerate_odd(n), enumerate_strict(n)
    a = q_matrix(n)
    # Q = A p, so p = A^{-1} Q and X_μ^λ = 2^{ℓ(λ)} (A^{-1})[μ][λ].
    try:
        ident = [[Fraction(int(i == j)) for j in range(len(a))] for i in range(len(a))]
        inv = solve(a, ident)
    except SingularSystemError as exc:
        raise ArithmeticError(f"Q-basis of degree {n} is singular") from exc
    entries = {}
    for i, mu in enumerate(odd):
        for j, lam in enumerate(strict):
            entries[(mu, lam)] = inv[i][j] * 2 ** len(lam)
    return CharacterMatrix(n, entries)


@lru_cache(maxsize=None)
def x_matrix(n: int) -> CharacterMatrix:
    """The character matrix at level n, read from the disk cache when available."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    data = cache.load("x_matrix", f"n{n}")
    if data is not None:
        x = CharacterMatrix.from_json(n, data)
        if len(x.entries) == len(enumerate_odd(n)) ** 2:
            return x
    x = _compute_x_matrix(n)
    cache.store("x_matrix", f"n{n}", x.to_json())
    return x


def character(lam: Iterable[int], mu: Iterable[int]) -> Fraction:
    """χ^λ(μ) = 2^{ℓ(μ) - (ℓ(λ)-δ(λ))/2} X_μ^λ."""
    lam = StrictPartition(sorted_parts(lam))
    mu = OddPartition(sorted_parts(mu))
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |λ| = {sum(lam)}, |μ| = {sum(mu)}")
    shift = len(mu) - (len(lam) - length_parity(lam)) // 2
    return x_matrix(sum(lam))[mu, lam] * Fraction(2) ** shift


def dimension(lam: Iterable[int]) -> int:
    """dim L^λ = 2^{n - (ℓ(λ)-δ(λ))/2} g'_λ."""
    from .partitions import count_shifted_tableaux

    lam = StrictPartition(sorted_parts(lam))
    n = sum(lam)
    return 2 ** (n - (len(lam) - length_parity(lam)) // 2) * count_shifted_tableaux(lam)


# Interpolation -----------------------------------------------------------

MAX_EXTRA_POINTS = 12


@lru_cache(maxsize=None)
def interpolation_points(d: int) -> tuple[int, tuple]:
    """(B, points): the smallest B ≥ 2 for which the p_γ, |γ| ≤ d, have
    linearly independent value vectors on strict λ with |λ| ≤ d + B."""
    unknowns = odd_up_to(d)
    for extra in range(2, MAX_EXTRA_POINTS + 1):
        points = tuple(strict_up_to(d + extra))
        rows = [[_monomial_value(tuple(g), tuple(lam)) for g in unknowns] for lam in points]
        if rank(rows) == len(unknowns):
            return extra, points
    raise SingularSystemError(f"no injective point set found for degree {d}")


def interpolate(values: Callable[[StrictPartition], Fraction], d: int) -> GammaElement:
    """The unique element of degree ≤ d with the given values on strict partitions."""
    unknowns = odd_up_to(d)
    extra, points = interpolation_points(d)
    while True:
        rows = [[_monomial_value(tuple(g), tuple(lam)) for g in unknowns] for lam in points]
        rhs = [[Fraction(values(lam))] for lam in points]
        try:
            sol = solve(rows, rhs)
            break
        except SingularSystemError as exc:
            if "inconsistent" in str(exc) or extra >= MAX_EXTRA_POINTS:
                raise
            extra += 1
            points = tuple(strict_up_to(d + extra))
    return GammaElement({g: sol[i][0] for i, g in enumerate(unknowns)})


def pfrak_value(mu: Iterable[int], lam: Iterable[int]) -> Fraction:
    """𝔭_μ(λ) = 2^{k-ℓ(μ)} n^{↓k} χ^λ(μ ∪ 1^{n-k}) / χ^λ(1^n), and 0 when n < k."""
    mu = OddPartition(sorted_parts(mu))
    lam = StrictPartition(sorted_parts(lam))
    k, n = sum(mu), sum(lam)
    if n < k:
        return Fraction(0)
    ratio = character(lam, pad_ones(mu, n)) / character(lam, (1,) * n)
    return Fraction(2) ** (k - len(mu)) * falling_factorial(n, k) * ratio


def _pfrak_to_json(f: GammaElement) -> dict:
    from .serialization import coeff_map

    return coeff_map(dict(f.items()))


@lru_cache(maxsize=None)
def _pfrak(mu: OddPartition) -> GammaElement:
    from .serialization import parse_partition_key

    key = "_".join(map(str, mu)) or "empty"
    data = cache.load("pfrak", key)
    if data is not None:
        return GammaElement({parse_partition_key(k): Fraction(v) for k, v in data.items()})
    f = interpolate(lambda lam: pfrak_value(mu, lam), sum(mu))
    cache.store("pfrak", key, _pfrak_to_json(f))
    return f


def pfrak(mu: Iterable[int]) -> GammaElement:
    """The inhomogeneous power sum 𝔭_μ."""
    return _pfrak(OddPartition(sorted_parts(mu)))


@lru_cache(maxsize=None)
def _factorial_schur_q(lam: StrictPartition) -> GammaElement:
    n = sum(lam)
    scale = 2 ** ((len(lam) - length_parity(lam)) // 2)
    out = GammaElement()
    for mu in enumerate_odd(n):
        c = character(lam, mu) * scale / z_stat(mu)
        if c:
            out = out + pfrak(mu) * c
    return out


def factorial_schur_q(lam: Iterable[int]) -> GammaElement:
    """Q*_λ = 2^{(ℓ(λ)-δ(λ))/2} Σ_μ χ^λ(μ)/z_μ 𝔭_μ."""
    return _factorial_schur_q(StrictPartition(sorted_parts(lam)))


@lru_cache(maxsize=None)
def moment_up_gamma(k: int) -> GammaElement:
    """The element of Γ whose value at λ is the up moment 𝕞↑_k(λ)."""
    from .schur_graph import up_moment

    return interpolate(lambda lam: up_moment(k, lam), 2 * k)


@lru_cache(maxsize=None)
def moment_down_gamma(k: int) -> GammaElement:
    """The element of Γ whose value at λ is the down moment 𝕞↓_k(λ), k ≥ 1."""
    from .schur_graph import down_moment

    if k < 1:
        raise ValueError("down moments are indexed from k = 1")
    return interpolate(lambda lam: down_moment(k, lam), 2 * k)


# Change of basis -----------------------------------------------------------

BASES = ("p", "pfrak", "Q", "Qstar")


def basis_element(basis: str, index: Iterable[int]) -> GammaElement:
    if basis == "p":
        return GammaElement.p(index)
    if basis == "pfrak":
        return pfrak(index)
    if basis == "Q":
        return schur_q(index)
    if basis == "Qstar":
        return factorial_schur_q(index)
    raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")


def _homogeneous_in_q(h: GammaElement, d: int) -> dict:
    """Q-coordinates of a homogeneous element of degree d."""
    x = x_matrix(d)
    out = {}
    for lam in x.cols:
        c = sum((a * x[mu, lam] for mu, a in h.coeffs.items()), Fraction(0)) / 2 ** len(lam)
        if c:
            out[lam] = c
    return out


def to_basis(f: GammaElement, basis: str) -> dict:
    """Coordinates of f in the chosen basis, keyed by partition in canonical order."""
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")
    out: dict = {}
    if basis == "p":
        out = dict(f.coeffs)
    elif basis == "Q":
        for d in range(f.degree() + 1):
            out.update(_homogeneous_in_q(f.homogeneous(d), d))
    else:
        # Both 𝔭_μ and Q*_λ equal their homogeneous counterparts plus lower terms.
        rest = f
        while rest:
            d = rest.degree()
            top = rest.homogeneous(d)
            coords = dict(top.coeffs) if basis == "pfrak" else _homogeneous_in_q(top, d)
            for key, c in coords.items():
                out[key] = out.get(key, Fraction(0)) + c
                rest = rest - basis_element(basis, key) * c
    return {k: out[k] for k in canonical_sorted(out) if out[k]}


def from_basis(coords: Mapping, basis: str) -> GammaElement:
    out = GammaElement()
    for key, c in coords.items():
        out = out + basis_element(basis, key) * Fraction(c)
    return out


# Test oracle: factorial Schur Q-polynomials in N variables ------------------


def factorial_schur_q_nvar(lam: Iterable[int], nvars: int):
    """Q*_{λ|N}(x_1..x_N) by direct symmetrization, as a sympy polynomial expression.

    Independent of the character machinery; meant for small λ and N only.
    """
    return _factorial_schur_q_nvar(tuple(StrictPartition(sorted_parts(lam))), nvars)


@lru_cache(maxsize=None)
def _factorial_schur_q_nvar(lam: tuple, nvars: int):
    import sympy

    xs = sympy.symbols(f"x1:{nvars + 1}")
    ell = len(lam)
    if ell > nvars:
        return sympy.Integer(0), xs

    def ff(x, k):
        return sympy.prod([x - i for i in range(k)])

    total = sympy.Integer(0)
    seen = set()
    for perm in permutations(range(nvars)):
        # Terms only depend on where the first ℓ variables go and the set of the rest.
        sig = perm[:ell]
        if sig in seen:
            continue
        seen.add(sig)
        ys = [xs[i] for i in perm]
        term = sympy.prod([ff(ys[i], lam[i]) for i in range(ell)])
        for i in range(ell):
            for j in range(i + 1, nvars):
                term *= (ys[i] + ys[j]) / (ys[i] - ys[j])
        total += term
    # Each distinct prefix stands for (N-ℓ)! permutations, cancelling the 1/(N-ℓ)!.
    total = sympy.cancel(sympy.together(total)) * 2 ** ell
    return sympy.expand(total), xs


def evaluate_nvar(lam: Iterable[int], nvars: int, nu: Iterable[int]) -> Fraction:
    """Q*_{λ|N}(ν_1, ..., ν_N), padding ν with zeros."""
    import sympy

    nu = tuple(nu)
    if len(nu) > nvars:
        raise ValueError("point has more parts than variables")
    poly, xs = factorial_schur_q_nvar(lam, nvars)
    point = dict(zip(xs, list(nu) + [0] * (nvars - len(nu))))
    value = sympy.Rational(poly.subs(point))
    return Fraction(int(value.p), int(value.q))


__all__ = [
    "GammaElement",
    "CharacterMatrix",
    "multiply",
    "evaluate",
    "q_series",
    "schur_q",
    "q_matrix",
    "x_matrix",
    "check_x_matrix",
    "character",
    "dimension",
    "interpolation_points",
    "interpolate",
    "pfrak_value",
    "pfrak",
    "factorial_schur_q",
    "moment_up_gamma",
    "moment_down_gamma",
    "BASES",
    "basis_element",
    "to_basis",
    "from_basis",
    "factorial_schur_q_nvar",
    "evaluate_nvar",
]
