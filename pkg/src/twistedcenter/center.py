"""
A symbolic model of the center End(1) of the twisted Heisenberg category.

End(1) is a free commutative polynomial algebra.  Two generating sets are
used: the odd-cycle closures α_1, α_3, α_5, ... (the "alpha" chart) and the
clockwise bubbles d_0, d_2, d_4, ... (the "d" chart).  An element is a
polynomial in one chart; monomials are sorted tuples of generator indices,
so α_3 α_1 α_1 is (1, 1, 3) and d_0² d_4 is (0, 0, 4).

φ: End(1) → Γ sends α_m ↦ 2𝔭_m and d_{2k} ↦ 𝕞↓_{k+1}.  Because both charts
are free, φ is injective on each and we move between charts by pulling back
through φ.  The closure α_ν of a permutation of odd cycle type ν is the
pullback of 2^{ℓ(ν)} 𝔭_ν.  F_n sends End(1) to the even center of Ser_n.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping

from .gamma import GammaElement, factorial_schur_q, moment_down_gamma, moment_up_gamma, pfrak
from .partitions import OddPartition, StrictPartition, enumerate_odd, path_count, sorted_parts, z_stat
from .sergeev import (
    SergeevElement,
    central_idempotent,
    class_sum_full,
    class_sum_scaled,
    distinguished_perm,
    down_sum_via_jm,
    jm_element,
)

CHARTS = ("alpha", "d")


def _check_index(chart: str, i: int) -> None:
    if chart == "alpha":
        if i < 1 or i % 2 == 0:
            raise ValueError(f"alpha generators are indexed by odd positive integers, got {i}")
    elif chart == "d":
        if i < 0 or i % 2:
            raise ValueError(f"d generators are indexed by even nonnegative integers, got {i}")
    else:
        raise ValueError(f"unknown chart {chart!r}; expected one of {CHARTS}")


class CenterElement:
    """A polynomial in the generators of one chart."""

    __slots__ = ("chart", "coeffs")

    def __init__(self, chart: str, coeffs: Mapping | None = None):
        if chart not in CHARTS:
            raise ValueError(f"unknown chart {chart!r}; expected one of {CHARTS}")
        self.chart = chart
        clean: dict = {}
        for mono, c in (coeffs or {}).items():
            mono = tuple(sorted(mono))
            for i in mono:
                _check_index(chart, i)
            c = Fraction(c)
            if c:
                clean[mono] = clean.get(mono, Fraction(0)) + c
        self.coeffs = {k: v for k, v in clean.items() if v}

    @classmethod
    def generator(cls, chart: str, index: int) -> "CenterElement":
        _check_index(chart, index)
        return cls(chart, {(index,): 1})

    @classmethod
    def scalar(cls, chart: str, c) -> "CenterElement":
        return cls(chart, {(): c})

    def _coerce(self, other) -> "CenterElement":
        if isinstance(other, (int, Fraction)):
            return CenterElement.scalar(self.chart, other)
        if not isinstance(other, CenterElement):
            raise TypeError(f"expected CenterElement, got {type(other).__name__}")
        if other.chart != self.chart:
            other = to_chart(other, self.chart)
        return other

    def __eq__(self, other) -> bool:
        if not isinstance(other, (CenterElement, int, Fraction)):
            return NotImplemented
        return self.coeffs == self._coerce(other).coeffs

    def __hash__(self):
        return hash((self.chart, frozenset(self.coeffs.items())))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other) -> "CenterElement":
        other = self._coerce(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + c
        return CenterElement(self.chart, out)

    __radd__ = __add__

    def __neg__(self) -> "CenterElement":
        return CenterElement(self.chart, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other) -> "CenterElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "CenterElement":
        return (-self) + other

    def __mul__(self, other) -> "CenterElement":
        if isinstance(other, (int, Fraction)):
            return CenterElement(self.chart, {k: c * other for k, c in self.coeffs.items()})
        other = self._coerce(other)
        out: dict = {}
        for a, x in self.coeffs.items():
            for b, y in other.coeffs.items():
                key = tuple(sorted(a + b))
                out[key] = out.get(key, Fraction(0)) + x * y
        return CenterElement(self.chart, out)

    def __rmul__(self, other) -> "CenterElement":
        return self * other

    def __pow__(self, k: int) -> "CenterElement":
        out = CenterElement.scalar(self.chart, 1)
        for _ in range(k):
            out = out * self
        return out

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: (-len(kv[0]), tuple(-i for i in kv[0])))

    def to_json(self) -> dict:
        return {"chart": self.chart,
                "terms": [{"monomial": list(m), "coeff": str(c)} for m, c in self.items()]}

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"CenterElement({self.chart}, 0)"
        sym = "α" if self.chart == "alpha" else "d"
        parts = []
        for mono, c in self.items():
            word = "·".join(f"{sym}{i}" for i in mono) or "1"
            parts.append(f"{c}·{word}")
        return f"CenterElement({self.chart}, " + " + ".join(parts) + ")"


def alpha(m: int) -> CenterElement:
    return CenterElement.generator("alpha", m)


def d(index: int) -> CenterElement:
    """The clockwise bubble d_{index} (index even)."""
    return CenterElement.generator("d", index)


# φ -------------------------------------------------------------------------


@lru_cache(maxsize=None)
def generator_image(chart: str, index: int) -> GammaElement:
    _check_index(chart, index)
    if chart == "alpha":
        return pfrak((index,)) * 2
    return moment_down_gamma(index // 2 + 1)


def phi(x: CenterElement) -> GammaElement:
    """The algebra map End(1) → Γ."""
    out = GammaElement()
    for mono, c in x.coeffs.items():
        term = GammaElement.scalar(c)
        for i in mono:
            term = term * generator_image(x.chart, i)
        out = out + term
    return out


def _leading(chart: str, index: int) -> Fraction:
    """Coefficient of p_{deg} in the top part of a generator image."""
    g = generator_image(chart, index)
    deg = index if chart == "alpha" else index + 1
    c = g.coeffs.get(OddPartition((deg,)), Fraction(0))
    if g.degree() != deg or not c:
        raise ArithmeticError(f"generator {chart}{index} has no leading term p_{deg}")
    return c


def pullback(f: GammaElement, chart: str) -> CenterElement:
    """The unique polynomial x in the chart's generators with φ(x) = f.

    Leading-term reduction: the top part of Π g_{m_i} is c·p_ν plus terms of
    the same degree and greater length, so we clear the top degree starting
    from its shortest partitions.
    """
    if chart not in CHARTS:
        raise ValueError(f"unknown chart {chart!r}; expected one of {CHARTS}")
    out = CenterElement(chart)
    rest = f
    guard = 0
    while rest:
        guard += 1
        if guard > 10000:
            raise ArithmeticError("pullback did not terminate")
        top = rest.top()
        nu = min(top.coeffs, key=lambda mu: (len(mu), tuple(-p for p in mu)))
        indices = tuple(nu) if chart == "alpha" else tuple(p - 1 for p in nu)
        if chart == "d" and not nu:
            indices = ()
        scale = Fraction(1)
        for i in indices:
            scale *= _leading(chart, i)
        mono = CenterElement(chart, {indices: top.coeffs[nu] / scale})
        out = out + mono
        rest = rest - phi(mono)
    return out


def to_chart(x: CenterElement, chart: str) -> CenterElement:
    if x.chart == chart:
        return x
    return pullback(phi(x), chart)


def alpha_of_partition(nu: Iterable[int]) -> CenterElement:
    """The closure α_ν of a permutation of odd cycle type ν, in the alpha chart.

    For a single part this is the generator α_m; in general it is the
    polynomial in the generators whose image is 2^{ℓ(ν)} 𝔭_ν.
    """
    parts = sorted_parts(nu)
    if any(p % 2 == 0 for p in parts):
        raise ValueError(f"closures are only modelled for odd cycle types, got {parts}")
    return _alpha_of_partition(OddPartition(parts))


@lru_cache(maxsize=None)
def _alpha_of_partition(nu: OddPartition) -> CenterElement:
    if len(nu) <= 1:
        return CenterElement("alpha", {tuple(nu): 1})
    return pullback(pfrak(nu) * 2 ** len(nu), "alpha")


@lru_cache(maxsize=None)
def dbar(k: int) -> CenterElement:
    """d̄_{2k} in the d chart: d̄_0 = 1 and d̄_{2k} = Σ_{a+b=k-1} d̄_{2a} d_{2b}."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return CenterElement.scalar("d", 1)
    out = CenterElement("d")
    for a in range(k):
        out = out + dbar(a) * d(2 * (k - 1 - a))
    return out


def grade(x: CenterElement) -> int:
    """Grading with deg d_0 = 0 and deg d_{2k} = 2k+1; -1 for zero."""
    x = to_chart(x, "d")
    return max((sum(0 if i == 0 else i + 1 for i in mono) for mono in x.coeffs), default=-1)


def alpha_leading_term_check(k: int) -> bool:
    """Whether φ(α_{2k+1}) - φ(d_{2k}) = 2𝔭_{2k+1} - 𝕞↓_{k+1} has Γ-degree below 2k+1."""
    diff = pfrak((2 * k + 1,)) * 2 - moment_down_gamma(k + 1)
    return diff.degree() < 2 * k + 1


def alpha_grade_check(k: int) -> bool:
    """Whether α_{2k+1} - d_{2k} has grade below 2k+1 in End(1)."""
    return grade(alpha(2 * k + 1) - d(2 * k)) < 2 * k + 1


# Fock images ---------------------------------------------------------------


@lru_cache(maxsize=None)
def fock_generator(chart: str, index: int, n: int) -> SergeevElement:
    """F_n on a single generator."""
    _check_index(chart, index)
    if chart == "alpha":
        if index > n:
            return SergeevElement.zero(n)
        return class_sum_scaled((index,), n)
    if n == 0:
        return SergeevElement.zero(0)
    return down_sum_via_jm(index, n)


def fock_image(x: CenterElement, n: int) -> SergeevElement:
    """F_n(x) in the even center of Ser_n."""
    out = SergeevElement.zero(n)
    for mono, c in x.coeffs.items():
        term = SergeevElement.identity(n) * c
        for i in mono:
            term = term * fock_generator(x.chart, i, n)
            if not term:
                break
        out = out + term
    return out


def fock_dbar(k: int, n: int) -> SergeevElement:
    """pr_n(J_{n+1}^{2k}), the Fock image of the counterclockwise bubble d̄_{2k}."""
    return (jm_element(n + 1, n + 1) ** (2 * k)).pr(n)


def dbar_image(k: int) -> GammaElement:
    return phi(dbar(k))


# Idempotent closures -------------------------------------------------------


def class_sum_coordinates(x: SergeevElement) -> dict[OddPartition, Fraction]:
    """Coordinates of an even central element in the basis {C_μ}.

    C_μ is the only basis element supported on the permutation π̃_μ, where
    its coefficient is 1, so the coordinate is read off there.  The
    reconstruction is checked.
    """
    n = x.n
    coords = {}
    for mu in enumerate_odd(n):
        c = x.coefficient((), distinguished_perm(mu, n))
        if c:
            coords[mu] = c / class_sum_full(mu).coefficient((), distinguished_perm(mu, n))
    total = SergeevElement.zero(n)
    for mu, c in coords.items():
        total = total + class_sum_full(mu) * c
    if total != x:
        raise ValueError("element is not in the span of the class sums C_μ")
    return coords


def idempotent_closure(lam: Iterable[int]) -> GammaElement:
    """Image in Γ of the closure of e_λ, using closure(C_μ) ↦ (n!/z_μ) 2^n 𝔭_μ."""
    lam = StrictPartition(sorted_parts(lam))
    n = sum(lam)
    out = GammaElement()
    for mu, c in class_sum_coordinates(central_idempotent(lam)).items():
        out = out + pfrak(mu) * (c * Fraction(factorial(n), z_stat(mu)) * 2 ** n)
    return out


def idempotent_closure_expected(lam: Iterable[int]) -> GammaElement:
    """g_λ Q*_λ."""
    lam = StrictPartition(sorted_parts(lam))
    return factorial_schur_q(lam) * path_count(lam)


__all__ = [
    "CHARTS",
    "CenterElement",
    "alpha",
    "d",
    "generator_image",
    "phi",
    "pullback",
    "to_chart",
    "alpha_of_partition",
    "dbar",
    "grade",
    "alpha_leading_term_check",
    "alpha_grade_check",
    "fock_generator",
    "fock_image",
    "fock_dbar",
    "dbar_image",
    "class_sum_coordinates",
    "idempotent_closure",
    "idempotent_closure_expected",
    "moment_up_gamma",
]
