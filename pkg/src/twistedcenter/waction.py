"""
The Lie algebra D̂⁻ underlying W⁻ and the action of its generators on Γ.

Two independent layers live here.

* LieElement models D̂⁻: finite sums of t^r f(D) with f a rational polynomial,
  plus a multiple of the central element C, with the bracket
  [t^r f(D), t^s g(D)] = t^{r+s}(f(D+s)g(D) - f(D)g(D+r)) + ψ C.

* WOperator models linear operators on Γ in the 𝔭-basis, truncated at a
  degree cutoff.  The generators act by
      A₋ 𝔭_μ = 2𝔭_{μ∪1},   A₊ 𝔭_μ = 𝔭_μ + k 𝔭_{μ̂},   B_m 𝔭_μ = 2𝔭_{μ∪m},
  and Ω₀₃ is multiplication by -𝔭_3 - 2𝔭_{11}.  Here k is the number of parts
  of μ equal to 1 and μ̂ removes one of them.  A± = √2 ω_{±1,0} and
  B_m = √2 ω_{-m,0}; an operator carries an exponent e meaning "times √2^e",
  so the ω normalizations stay exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping

import sympy

from .gamma import GammaElement, from_basis, pfrak, to_basis
from .partitions import OddPartition, odd_up_to, sorted_parts

DEFAULT_CUTOFF = 8


class CutoffExceeded(ValueError):
    """An operator was asked for a result above its degree cutoff."""


# Operators on Γ ----------------------------------------------------------------

Column = dict  # OddPartition -> Fraction, coordinates in the 𝔭-basis


def _add_into(out: dict, col: Mapping, scale: Fraction) -> None:
    for k, v in col.items():
        out[k] = out.get(k, Fraction(0)) + v * scale


class WOperator:
    """√2^{sqrt2} times the linear map sending 𝔭_μ to Σ_ν column(μ)[ν] 𝔭_ν, for |μ| ≤ cutoff."""

    def __init__(self, column: Callable[[OddPartition], Column], cutoff: int = DEFAULT_CUTOFF,
                 sqrt2: int = 0, name: str = "W"):
        self._column = column
        self._cache: dict = {}
        self.cutoff = cutoff
        self.sqrt2 = sqrt2
        self.name = name

    def column(self, mu: Iterable[int]) -> Column:
        mu = OddPartition(sorted_parts(mu))
        if sum(mu) > self.cutoff:
            raise CutoffExceeded(f"{self.name}: input 𝔭_{list(mu)} exceeds cutoff {self.cutoff}")
        col = self._cache.get(mu)
        if col is None:
            col = {k: v for k, v in self._column(mu).items() if v}
            for nu in col:
                if sum(nu) > self.cutoff:
                    raise CutoffExceeded(
                        f"{self.name}: image of 𝔭_{list(mu)} reaches degree {sum(nu)} > cutoff {self.cutoff}")
            self._cache[mu] = col
        return col

    def apply_coords(self, coords: Mapping) -> Column:
        out: dict = {}
        for mu, c in coords.items():
            _add_into(out, self.column(mu), Fraction(c))
        return {k: v for k, v in out.items() if v}

    def apply_scaled(self, f: GammaElement) -> tuple[GammaElement, int]:
        """(g, e) with the true image equal to √2^e · g."""
        if f.degree() > self.cutoff:
            raise CutoffExceeded(f"{self.name}: input of degree {f.degree()} exceeds cutoff {self.cutoff}")
        return from_basis(self.apply_coords(to_basis(f, "pfrak")), "pfrak"), self.sqrt2

    def __call__(self, f: GammaElement) -> GammaElement:
        g, e = self.apply_scaled(f)
        if e % 2:
            raise ValueError(f"{self.name} carries an odd power of √2; use apply_scaled")
        return g * Fraction(2) ** (e // 2)

    # algebra of operators
    def _rescaled(self, e: int) -> Callable[[OddPartition], Column]:
        """Column function of self written with √2 exponent e."""
        diff = self.sqrt2 - e
        if diff % 2:
            raise ValueError("cannot add operators whose √2 exponents differ in parity")
        scale = Fraction(2) ** (diff // 2)
        return lambda mu: {k: v * scale for k, v in self.column(mu).items()}

    def __add__(self, other: "WOperator") -> "WOperator":
        e = min(self.sqrt2, other.sqrt2)
        a, b = self._rescaled(e), other._rescaled(e)

        def column(mu):
            out: dict = {}
            _add_into(out, a(mu), Fraction(1))
            _add_into(out, b(mu), Fraction(1))
            return out
        return WOperator(column, min(self.cutoff, other.cutoff), e, f"({self.name}+{other.name})")

    def __neg__(self) -> "WOperator":
        return self * Fraction(-1)

    def __sub__(self, other: "WOperator") -> "WOperator":
        return self + (-other)

    def __mul__(self, other) -> "WOperator":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return WOperator(lambda mu: {k: v * c for k, v in self.column(mu).items()},
                             self.cutoff, self.sqrt2, f"{c}{self.name}")
        if not isinstance(other, WOperator):
            return NotImplemented
        return self.compose(other)

    def __rmul__(self, other) -> "WOperator":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def compose(self, other: "WOperator") -> "WOperator":
        """self ∘ other."""
        def column(mu):
            return self.apply_coords(other.column(mu))
        return WOperator(column, min(self.cutoff, other.cutoff), self.sqrt2 + other.sqrt2,
                         f"{self.name}{other.name}")

    def matrix(self, degree: int | None = None) -> dict:
        """{μ: column} for all odd μ with |μ| ≤ degree (default: the cutoff)."""
        degree = self.cutoff if degree is None else degree
        return {mu: self.column(mu) for mu in odd_up_to(degree)}

    def equals(self, other: "WOperator", degree: int) -> bool:
        """Equality on inputs of degree ≤ degree, as real operators."""
        if (self.sqrt2 - other.sqrt2) % 2:
            # √2 times a rational map equals a rational map only when both vanish.
            return self.is_zero(degree) and other.is_zero(degree)
        e = min(self.sqrt2, other.sqrt2)
        a, b = self._rescaled(e), other._rescaled(e)
        return all(a(mu) == b(mu) for mu in odd_up_to(degree))

    def is_zero(self, degree: int) -> bool:
        return not any(self.column(mu) for mu in odd_up_to(degree))

    def __repr__(self) -> str:
        return f"WOperator({self.name}, cutoff={self.cutoff}, sqrt2={self.sqrt2})"


def commutator(a: WOperator, b: WOperator) -> WOperator:
    return a.compose(b) - b.compose(a)


def identity_operator(cutoff: int = DEFAULT_CUTOFF) -> WOperator:
    return WOperator(lambda mu: {mu: Fraction(1)}, cutoff, 0, "I")


def a_minus(cutoff: int = DEFAULT_CUTOFF) -> WOperator:
    """A₋ = √2 ω_{-1,0}: 𝔭_μ ↦ 2𝔭_{μ∪1}."""
    return WOperator(lambda mu: {OddPartition(mu + (1,)): Fraction(2)}, cutoff, 0, "A-")


def _a_plus_column(mu: OddPartition) -> Column:
    k = mu.multiplicity(1)
    out = {mu: Fraction(1)}
    if k:
        hat = list(mu)
        hat.remove(1)
        out[OddPartition(hat)] = Fraction(k)
    return out


def a_plus(cutoff: int = DEFAULT_CUTOFF) -> WOperator:
    """A₊ = √2 ω_{1,0}: 𝔭_μ ↦ 𝔭_μ + k 𝔭_{μ̂}, k the number of parts equal to 1."""
    return WOperator(_a_plus_column, cutoff, 0, "A+")


def b_op(m: int, cutoff: int = DEFAULT_CUTOFF) -> WOperator:
    """B_m = √2 ω_{-m,0} for odd m ≥ 3: 𝔭_μ ↦ 2𝔭_{μ∪m}."""
    if m < 3 or m % 2 == 0:
        raise ValueError(f"B_m needs odd m >= 3, got {m}")
    return WOperator(lambda mu: {OddPartition(sorted_parts(mu + (m,))): Fraction(2)}, cutoff, 0, f"B{m}")


def omega03_factor() -> GammaElement:
    """-𝔭_3 - 2𝔭_{11}."""
    return pfrak((3,)) * -1 - pfrak((1, 1)) * 2


def omega03(cutoff: int = DEFAULT_CUTOFF) -> WOperator:
    """ω_{0,3}: multiplication by -𝔭_3 - 2𝔭_{11}."""
    factor = omega03_factor()

    def column(mu):
        if sum(mu) + 3 > cutoff:
            raise CutoffExceeded(f"ω03: image of 𝔭_{list(mu)} reaches degree {sum(mu) + 3} > cutoff {cutoff}")
        return to_basis(factor * pfrak(mu), "pfrak")
    return WOperator(column, cutoff, 0, "Ω03")


def omega(r: int, s: int, cutoff: int = DEFAULT_CUTOFF) -> WOperator:
    """The ω generators with a stated action, in their own normalization."""
    if (r, s) == (-1, 0):
        op = a_minus(cutoff)
    elif (r, s) == (1, 0):
        op = a_plus(cutoff)
    elif (r, s) == (0, 3):
        return omega03(cutoff)
    elif s == 0 and r <= -3 and r % 2:
        op = b_op(-r, cutoff)
    else:
        raise ValueError(f"no stated action for ω_({r},{s})")
    op.sqrt2 = -1
    op.name = f"ω({r},{s})"
    return op


DERIVED = ("omega01", "omega_m1_2_minus_m1_1", "omega_1_2_plus_1_1")


def derived_operator(name: str, cutoff: int = DEFAULT_CUTOFF) -> WOperator:
    """Operators defined from ω_{±1,0} and ω_{0,3} by the generation identities."""
    wm, wp, w03 = omega(-1, 0, cutoff), omega(1, 0, cutoff), omega03(cutoff)
    w01 = commutator(commutator(w03, wm), wp) * Fraction(-1, 20) + (wm * wp) * Fraction(1, 5)
    if name == "omega01":
        return w01
    if name == "omega_m1_2_minus_m1_1":
        return commutator(w03, wm) * Fraction(1, 6) + (wm * w01) * Fraction(1, 3)
    if name == "omega_1_2_plus_1_1":
        return commutator(w03, wp) * Fraction(-1, 6) + (w01 * wp) * Fraction(1, 3)
    raise ValueError(f"unknown derived operator {name!r}; expected one of {DERIVED}")


GENERATORS = ("Aminus", "Aplus", "Omega03", "B3", "B5", "B7") + DERIVED


def operator_by_name(name: str, cutoff: int = DEFAULT_CUTOFF) -> WOperator:
    if name == "Aminus":
        return a_minus(cutoff)
    if name == "Aplus":
        return a_plus(cutoff)
    if name == "Omega03":
        return omega03(cutoff)
    if name.startswith("B") and name[1:].isdigit():
        return b_op(int(name[1:]), cutoff)
    if name in DERIVED:
        return derived_operator(name, cutoff)
    raise ValueError(f"unknown generator {name!r}; expected one of {GENERATORS}")


def apply_A_minus(f: GammaElement, cutoff: int = DEFAULT_CUTOFF) -> GammaElement:
    return a_minus(cutoff)(f)


def apply_A_plus(f: GammaElement, cutoff: int = DEFAULT_CUTOFF) -> GammaElement:
    return a_plus(cutoff)(f)


def apply_omega03(f: GammaElement, cutoff: int = DEFAULT_CUTOFF) -> GammaElement:
    return omega03(cutoff)(f)


def apply_B(m: int, f: GammaElement, cutoff: int = DEFAULT_CUTOFF) -> GammaElement:
    return b_op(m, cutoff)(f)


# The Lie algebra D̂⁻ ------------------------------------------------------------

D = sympy.Symbol("D")


def _poly(f) -> sympy.Poly:
    if isinstance(f, sympy.Poly):
        return f.set_domain(sympy.QQ) if f.gens == (D,) else sympy.Poly(f.as_expr(), D, domain=sympy.QQ)
    if isinstance(f, (int, Fraction)):
        f = sympy.Rational(Fraction(f).numerator, Fraction(f).denominator)
    return sympy.Poly(f, D, domain=sympy.QQ)


def _frac(q) -> Fraction:
    q = sympy.Rational(q)
    return Fraction(int(q.p), int(q.q))


def satisfies_parity(r: int, f) -> bool:
    """Whether t^r f(D) lies in D̂⁻: f(x - r/2) is even for odd r and odd for even r."""
    h = sympy.expand(_poly(f).as_expr().subs(D, D - sympy.Rational(r, 2)))
    h_neg = sympy.expand(h.subs(D, -D))
    return sympy.expand(h - h_neg) == 0 if r % 2 else sympy.expand(h + h_neg) == 0


class LieElement:
    """Σ_r t^r f_r(D) + c·C."""

    __slots__ = ("terms", "central")

    def __init__(self, terms: Mapping | None = None, central=0):
        clean = {}
        for r, f in (terms or {}).items():
            p = _poly(f)
            if not p.is_zero:
                clean[int(r)] = p
        self.terms = clean
        self.central = Fraction(central)

    @classmethod
    def t(cls, r: int, f=1, check: bool = True) -> "LieElement":
        """t^r f(D); with check=True the parity condition of D̂⁻ is enforced."""
        if check and not satisfies_parity(r, f):
            raise ValueError(f"t^{r}·({f}) violates the parity condition")
        return cls({r: f})

    @classmethod
    def c(cls, value=1) -> "LieElement":
        return cls({}, value)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.central == other.central and self.terms == other.terms

    def __hash__(self):
        return hash((self.central, frozenset((r, p.as_expr()) for r, p in self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms) or bool(self.central)

    def __add__(self, other: "LieElement") -> "LieElement":
        terms = dict(self.terms)
        for r, p in other.terms.items():
            terms[r] = terms[r] + p if r in terms else p
        return LieElement(terms, self.central + other.central)

    def __neg__(self) -> "LieElement":
        return LieElement({r: -p for r, p in self.terms.items()}, -self.central)

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def __mul__(self, c) -> "LieElement":
        c = Fraction(c)
        q = sympy.Rational(c.numerator, c.denominator)
        return LieElement({r: p * q for r, p in self.terms.items()}, self.central * c)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        parts = [f"t^{r}·({p.as_expr()})" for r, p in sorted(self.terms.items())]
        if self.central:
            parts.append(f"{self.central}·C")
        return "LieElement(" + (" + ".join(parts) or "0") + ")"


def cocycle(r: int, f: sympy.Poly, s: int, g: sympy.Poly) -> Fraction:
    """ψ(t^r f, t^s g): Σ_{-r≤j≤-1} f(j) g(j+r) when r = -s ≥ 0, antisymmetric, else 0."""
    if r + s != 0:
        return Fraction(0)
    if r < 0:
        return -cocycle(s, g, r, f)
    return sum((_frac(f.eval(j)) * _frac(g.eval(j + r)) for j in range(-r, 0)), Fraction(0))


def bracket(x: LieElement, y: LieElement) -> LieElement:
    """Bilinear extension of [t^r f(D), t^s g(D)]; C is central."""
    out = LieElement()
    for r, f in x.terms.items():
        for s, g in y.terms.items():
            main = f.shift(s) * g - f * g.shift(r)
            out = out + LieElement({r + s: main}, cocycle(r, f, s, g))
    return out


def random_lie_element(rng, r_range=(-3, 3), max_degree: int = 4, parity: bool = True) -> LieElement:
    """A single term t^r f(D) with random rational coefficients.

    With parity=True, f(D) = h(D + r/2) for a random h of the parity required by D̂⁻.
    """
    r = rng.randint(*r_range)
    coeffs = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(max_degree + 1)]
    if parity:
        want = 0 if r % 2 else 1
        coeffs = [c if i % 2 == want else Fraction(0) for i, c in enumerate(coeffs)]
    h = sum(sympy.Rational(c.numerator, c.denominator) * D ** i for i, c in enumerate(coeffs))
    if parity:
        h = h.subs(D, D + sympy.Rational(r, 2))
    return LieElement({r: sympy.expand(h)})


def jacobi(x: LieElement, y: LieElement, z: LieElement) -> LieElement:
    return bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))


__all__ = [
    "DEFAULT_CUTOFF",
    "CutoffExceeded",
    "WOperator",
    "commutator",
    "identity_operator",
    "a_minus",
    "a_plus",
    "b_op",
    "omega03_factor",
    "omega03",
    "omega",
    "DERIVED",
    "derived_operator",
    "GENERATORS",
    "operator_by_name",
    "apply_A_minus",
    "apply_A_plus",
    "apply_omega03",
    "apply_B",
    "D",
    "LieElement",
    "satisfies_parity",
    "cocycle",
    "bracket",
    "random_lie_element",
    "jacobi",
]
