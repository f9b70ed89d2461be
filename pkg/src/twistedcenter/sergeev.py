"""
Exact arithmetic in the Sergeev superalgebra Ser_n = Cl_n ⋊ C[S_n] and in the
twisted hyperoctahedral group B̂_n that covers it.

A basis monomial is c_S σ: a normal-ordered Clifford word c_{i_1}⋯c_{i_t}
(i_1 < ... < i_t) on the left of a permutation σ.  Internally S is a bitmask
(bit i-1 for c_i) and σ is an index into a per-level table of 0-based one-line
permutations, with products read right to left: (στ)(x) = σ(τ(x)).

Multiplication uses σ c_T σ^{-1} = ±c_{σ(T)} and c_S c_U = ±c_{S⊕U}; both
signs are tabulated per level.  The group B̂_n uses the same tables, with the
sign -1 recorded as the central element z, and the projection B̂_n → Ser_n
sends z to -1.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial, gcd
from typing import Iterable, Iterator, NamedTuple

from .gamma import character
from .linalg import SingularSystemError, solve
from .partitions import (
    OddPartition,
    StrictPartition,
    count_shifted_tableaux,
    enumerate_odd,
    enumerate_strict,
    length_parity,
    sorted_parts,
)

MAX_LEVEL = 7


# Permutations ---------------------------------------------------------------


class Permutation(tuple):
    """One-line notation (σ(1), ..., σ(n)) of a permutation of {1..n}; products act right to left."""

    def __new__(cls, images: Iterable[int] = ()):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Iterable[int]]) -> "Permutation":
        """Product of disjoint cycles; a cycle (a_1, a_2, ...) sends a_1 to a_2."""
        img = list(range(1, n + 1))
        for cyc in cycles:
            cyc = list(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b
        return cls(img)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(self) != len(other):
            raise ValueError("permutations of different sizes")
        return Permutation(self[other[i] - 1] for i in range(len(self)))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, x in enumerate(self):
            inv[x - 1] = i + 1
        return Permutation(inv)

    def cycle_type(self) -> tuple[int, ...]:
        seen, out = set(), []
        for start in range(1, len(self) + 1):
            if start in seen:
                continue
            length, x = 0, start
            while x not in seen:
                seen.add(x)
                x = self(x)
                length += 1
            out.append(length)
        return sorted_parts(out)

    def __repr__(self) -> str:
        return f"Permutation({list(self)})"


def _bits(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def _mask(indices: Iterable[int]) -> int:
    out = 0
    for i in indices:
        out |= 1 << i
    return out


class _Level:
    """Lazily filled lookup tables for one level n."""

    def __init__(self, n: int):
        self.n = n
        self.perms = list(permutations(range(n)))
        self.index = {p: i for i, p in enumerate(self.perms)}
        self.inv = []
        for p in self.perms:
            q = [0] * n
            for i, x in enumerate(p):
                q[x] = i
            self.inv.append(self.index[tuple(q)])
        self.nmasks = 1 << n
        self._compose: dict[int, list[int]] = {}
        self._act: dict[int, tuple[list[int], list[int]]] = {}
        self.csign = [[self._csign(s, u) for u in range(self.nmasks)] for s in range(self.nmasks)]

    @staticmethod
    def _csign(s: int, u: int) -> int:
        # c_S c_U = (-1)^{#{(a,b): a∈S, b∈U, a>b} + |S∩U|} c_{S⊕U}
        inv = sum(bin(s >> (b + 1)).count("1") for b in _bits(u))
        return -1 if (inv + bin(s & u).count("1")) % 2 else 1

    def compose_row(self, i: int) -> list[int]:
        row = self._compose.get(i)
        if row is None:
            p = self.perms[i]
            row = [self.index[tuple(p[x] for x in q)] for q in self.perms]
            self._compose[i] = row
        return row

    def act(self, i: int) -> tuple[list[int], list[int]]:
        """(images, signs): σ c_T σ^{-1} = sign[T] · c_{images[T]}."""
        tab = self._act.get(i)
        if tab is None:
            p = self.perms[i]
            images, signs = [], []
            for t in range(self.nmasks):
                seq = [p[b] for b in _bits(t)]
                images.append(_mask(seq))
                inversions = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
                signs.append(-1 if inversions % 2 else 1)
            tab = (images, signs)
            self._act[i] = tab
        return tab

    def perm_index(self, perm: Iterable[int]) -> int:
        return self.index[tuple(perm)]


@lru_cache(maxsize=None)
def _level(n: int) -> _Level:
    if n < 0 or n > MAX_LEVEL:
        raise ValueError(f"level must be between 0 and {MAX_LEVEL}, got {n}")
    return _Level(n)


def _mono_mul(lv: _Level, s: int, si: int, t: int, ti: int) -> tuple[int, int, int]:
    """(c_S σ)(c_T τ) = sign · c_{S⊕σ(T)} στ."""
    images, signs = lv.act(si)
    u = images[t]
    return signs[t] * lv.csign[s][u], s ^ u, lv.compose_row(si)[ti]


def _mono_inv(lv: _Level, s: int, si: int) -> tuple[int, int, int]:
    """(c_S σ)^{-1} = csign(S,S) · σ^{-1} c_S = sign · c_{σ^{-1}(S)} σ^{-1}."""
    vi = lv.inv[si]
    images, signs = lv.act(vi)
    return lv.csign[s][s] * signs[s], images[s], vi


# Elements ---------------------------------------------------------------------


class SergeevMonomial(NamedTuple):
    """c_{i_1}⋯c_{i_t} σ with 1-based Clifford indices in increasing order."""

    clifford: tuple
    perm: Permutation

    @property
    def parity(self) -> int:
        return len(self.clifford) % 2


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _as_ints(terms: dict) -> tuple[dict, int]:
    den = 1
    for c in terms.values():
        den = _lcm(den, c.denominator)
    return {k: int(c * den) for k, c in terms.items()}, den


class SergeevElement:
    """A finite linear combination of monomials c_S σ in Ser_n."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict | None = None):
        self.n = n
        _level(n)
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v}

    # constructors
    @classmethod
    def identity(cls, n: int) -> "SergeevElement":
        return cls(n, {(0, 0): 1})

    @classmethod
    def zero(cls, n: int) -> "SergeevElement":
        return cls(n)

    @classmethod
    def monomial(cls, n: int, clifford: Iterable[int] = (), perm: Iterable[int] | None = None,
                 coeff=1) -> "SergeevElement":
        """coeff · c_{i_1}⋯c_{i_t} σ, reordering the Clifford word into normal form."""
        lv = _level(n)
        perm = tuple(range(1, n + 1)) if perm is None else tuple(perm)
        pi = lv.perm_index(tuple(x - 1 for x in Permutation(perm)))
        mask, sign = 0, 1
        for i in clifford:
            if not 1 <= i <= n:
                raise ValueError(f"Clifford index {i} out of range for level {n}")
            bit = 1 << (i - 1)
            sign *= lv.csign[mask][bit]
            mask ^= bit
        return cls(n, {(mask, pi): sign * Fraction(coeff)})

    # inspection
    def coefficient(self, clifford: Iterable[int] = (), perm: Iterable[int] | None = None) -> Fraction:
        lv = _level(self.n)
        perm = tuple(range(1, self.n + 1)) if perm is None else tuple(perm)
        key = (_mask(i - 1 for i in clifford), lv.perm_index(tuple(x - 1 for x in perm)))
        return self.terms.get(key, Fraction(0))

    def identity_coefficient(self) -> Fraction:
        return self.terms.get((0, 0), Fraction(0))

    def monomials(self) -> Iterator[tuple[SergeevMonomial, Fraction]]:
        lv = _level(self.n)
        for (mask, pi), c in self.terms.items():
            perm = Permutation(x + 1 for x in lv.perms[pi])
            yield SergeevMonomial(tuple(i + 1 for i in _bits(mask)), perm), c

    def is_even(self) -> bool:
        return all(bin(mask).count("1") % 2 == 0 for mask, _ in self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    # arithmetic
    def _check(self, other: "SergeevElement") -> None:
        if not isinstance(other, SergeevElement):
            raise TypeError(f"expected SergeevElement, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"level mismatch: {self.n} vs {other.n}")

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SergeevElement.identity(self.n) * other
        if not isinstance(other, SergeevElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other) -> "SergeevElement":
        if isinstance(other, (int, Fraction)):
            other = SergeevElement.identity(self.n) * other
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return SergeevElement(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "SergeevElement":
        return SergeevElement(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "SergeevElement":
        if isinstance(other, (int, Fraction)):
            other = SergeevElement.identity(self.n) * other
        return self + (-other)

    def __rsub__(self, other) -> "SergeevElement":
        return (-self) + other

    def __mul__(self, other) -> "SergeevElement":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return SergeevElement(self.n, {k: v * c for k, v in self.terms.items()})
        if not isinstance(other, SergeevElement):
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other) -> "SergeevElement":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> "SergeevElement":
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = SergeevElement.identity(self.n)
        for _ in range(k):
            out = out * self
        return out

    # levels
    def relevel(self, m: int) -> "SergeevElement":
        """Image under the standard embedding Ser_n ↪ Ser_m (m ≥ n)."""
        if m < self.n:
            raise ValueError("relevel only embeds upward; use pr for projection")
        src, dst = _level(self.n), _level(m)
        tail = tuple(range(self.n, m))
        return SergeevElement(m, {(mask, dst.index[src.perms[pi] + tail]): c
                                  for (mask, pi), c in self.terms.items()})

    def pr(self, m: int) -> "SergeevElement":
        """pr_m: keep the monomials lying in Ser_m (m ≤ n), drop the rest."""
        if m > self.n:
            raise ValueError("pr only projects downward")
        src, dst = _level(self.n), _level(m)
        out = {}
        for (mask, pi), c in self.terms.items():
            p = src.perms[pi]
            if mask >> m or any(p[i] != i for i in range(m, self.n)):
                continue
            out[(mask, dst.index[p[:m]])] = c
        return SergeevElement(m, out)

    def to_json(self) -> list[dict]:
        rows = [{"clifford": list(m.clifford), "perm": list(m.perm), "coeff": str(c)}
                for m, c in self.monomials()]
        rows.sort(key=lambda r: (len(r["clifford"]), r["clifford"], r["perm"]))
        return rows

    @classmethod
    def from_json(cls, n: int, rows: list[dict]) -> "SergeevElement":
        out = cls.zero(n)
        for r in rows:
            out = out + cls.monomial(n, r["clifford"], r["perm"], Fraction(r["coeff"]))
        return out

    def __repr__(self) -> str:
        if not self.terms:
            return f"SergeevElement(n={self.n}, 0)"
        parts = []
        for m, c in self.monomials():
            word = "".join(f"c{i}" for i in m.clifford)
            parts.append(f"{c}·{word}{list(m.perm)}")
        return f"SergeevElement(n={self.n}, " + " + ".join(parts) + ")"


def multiply(x: SergeevElement, y: SergeevElement) -> SergeevElement:
    """Bilinear product in normal form."""
    x._check(y)
    lv = _level(x.n)
    a, da = _as_ints(x.terms)
    b, db = _as_ints(y.terms)
    csign = lv.csign
    out: dict = {}
    b_items = list(b.items())
    for (s, si), ca in a.items():
        images, signs = lv.act(si)
        row = lv.compose_row(si)
        cs = csign[s]
        for (t, ti), cb in b_items:
            u = images[t]
            key = (s ^ u, row[ti])
            v = signs[t] * cs[u] * ca * cb
            out[key] = out.get(key, 0) + v
    den = da * db
    return SergeevElement(x.n, {k: Fraction(v, den) for k, v in out.items() if v})


def inverse_monomial(m: SergeevElement) -> SergeevElement:
    """Inverse of a single scaled monomial c·c_S σ."""
    if len(m.terms) != 1:
        raise ValueError("inverse_monomial expects a single monomial")
    ((s, si), c), = m.terms.items()
    sign, u, vi = _mono_inv(_level(m.n), s, si)
    return SergeevElement(m.n, {(u, vi): sign / c})


def conjugate(g: SergeevElement, x: SergeevElement) -> SergeevElement:
    """g x g^{-1} for a monomial g."""
    return g * x * inverse_monomial(g)


# Generators -----------------------------------------------------------------


def s_gen(i: int, n: int) -> SergeevElement:
    """The Coxeter generator s_i = (i, i+1)."""
    if not 1 <= i < n:
        raise ValueError(f"s_{i} is not defined at level {n}")
    return SergeevElement.monomial(n, (), Permutation.from_cycles(n, [(i, i + 1)]))


def c_gen(i: int, n: int) -> SergeevElement:
    return SergeevElement.monomial(n, (i,))


def transposition(i: int, j: int, n: int) -> SergeevElement:
    return SergeevElement.monomial(n, (), Permutation.from_cycles(n, [(i, j)]))


def perm_element(perm: Iterable[int]) -> SergeevElement:
    perm = Permutation(perm)
    return SergeevElement.monomial(len(perm), (), perm)


def jm_element(k: int, n: int) -> SergeevElement:
    """J_k = Σ_{j<k} (1 + c_k c_j)(j, k) = Σ_{j<k} (j, k)(1 + c_j c_k); J_1 = 0.

    With c_i² = -1 this ordering of the Clifford factor is the one for which
    the J_k commute.
    """
    if not 1 <= k <= n:
        raise ValueError(f"J_{k} is not defined at level {n}")
    out = SergeevElement.zero(n)
    for j in range(1, k):
        t = transposition(j, k, n)
        out = out + t + SergeevElement.monomial(n, (k, j)) * t
    return out


# The group B̂_n ----------------------------------------------------------------


class HyperElement(NamedTuple):
    """z^zbit a_S σ in B̂_n, stored with the same mask/permutation-index encoding."""

    n: int
    zbit: int
    mask: int
    perm: int

    @classmethod
    def identity(cls, n: int) -> "HyperElement":
        return cls(n, 0, 0, 0)

    @classmethod
    def z(cls, n: int) -> "HyperElement":
        return cls(n, 1, 0, 0)

    @classmethod
    def a(cls, j: int, n: int) -> "HyperElement":
        return cls(n, 0, 1 << (j - 1), 0)

    @classmethod
    def s(cls, i: int, n: int) -> "HyperElement":
        p = list(range(n))
        p[i - 1], p[i] = p[i], p[i - 1]
        return cls(n, 0, 0, _level(n).index[tuple(p)])

    @classmethod
    def from_perm(cls, perm: Iterable[int]) -> "HyperElement":
        perm = tuple(perm)
        n = len(perm)
        return cls(n, 0, 0, _level(n).index[tuple(x - 1 for x in perm)])

    def __mul__(self, other: "HyperElement") -> "HyperElement":
        lv = _level(self.n)
        sign, mask, pi = _mono_mul(lv, self.mask, self.perm, other.mask, other.perm)
        return HyperElement(self.n, self.zbit ^ other.zbit ^ (sign < 0), mask, pi)

    def inverse(self) -> "HyperElement":
        sign, mask, pi = _mono_inv(_level(self.n), self.mask, self.perm)
        return HyperElement(self.n, self.zbit ^ (sign < 0), mask, pi)

    def conjugate(self, h: "HyperElement") -> "HyperElement":
        """self · h · self^{-1}."""
        return self * h * self.inverse()

    def permutation(self) -> Permutation:
        return Permutation(x + 1 for x in _level(self.n).perms[self.perm])

    def project(self) -> SergeevElement:
        """π_n: z ↦ -1, a_j ↦ c_j."""
        return SergeevElement(self.n, {(self.mask, self.perm): -1 if self.zbit else 1})


def hyper_generators(n: int) -> list[HyperElement]:
    return [HyperElement.s(i, n) for i in range(1, n)] + [HyperElement.a(j, n) for j in range(1, n + 1)]


def hyper_group(n: int) -> list[HyperElement]:
    """All 2^{n+1} n! elements of B̂_n."""
    lv = _level(n)
    return [HyperElement(n, z, m, p) for z in (0, 1) for m in range(lv.nmasks) for p in range(len(lv.perms))]


def project_sum(elements: Iterable[HyperElement], n: int) -> SergeevElement:
    out: dict = {}
    for h in elements:
        key = (h.mask, h.perm)
        out[key] = out.get(key, 0) + (-1 if h.zbit else 1)
    return SergeevElement(n, out)


def coset_reps(n: int, k: int) -> list[HyperElement]:
    """L_{n,k}: products (s_{i_n}⋯s_{n-1} a_n^{ε_n})⋯(s_{i_{k+1}}⋯s_k a_{k+1}^{ε_{k+1}})."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    reps = [HyperElement.identity(n)]
    for j in range(n, k, -1):
        factors = []
        for i in range(1, j + 1):
            word = HyperElement.identity(n)
            for t in range(i, j):
                word = word * HyperElement.s(t, n)
            factors.append(word)
            factors.append(word * HyperElement.a(j, n))
        reps = [r * f for r in reps for f in factors]
    return reps


def coset_reps_projected(n: int, k: int) -> list[SergeevElement]:
    return [g.project() for g in coset_reps(n, k)]


def distinguished_perm(mu: Iterable[int], n: int) -> Permutation:
    """π̃_μ^{(n)} = τ_0 π_μ τ_0^{-1}, where π_μ = (k, ..., k-μ_r+1)⋯(μ_1, ..., 2, 1)."""
    mu = OddPartition(sorted_parts(mu))
    k = sum(mu)
    if k > n:
        raise ValueError(f"|μ| = {k} exceeds level {n}")
    cycles, start = [], 0
    for part in mu:
        cycles.append(list(range(start + part, start, -1)))
        start += part
    pi = Permutation.from_cycles(n, cycles)
    tau0 = Permutation(range(n, 0, -1))
    return tau0 * pi * tau0.inverse()


# Class sums -----------------------------------------------------------------


@lru_cache(maxsize=None)
def _class_sum_scaled(mu: OddPartition, n: int) -> SergeevElement:
    base = HyperElement.from_perm(distinguished_perm(mu, n))
    return project_sum((g.conjugate(base) for g in coset_reps(n, n - sum(mu))), n)


def class_sum_scaled(mu: Iterable[int], n: int) -> SergeevElement:
    """a_μ^{(n)} = π(Σ_{g ∈ L_{n,n-k}} g π̃_μ^{(n)} g^{-1})."""
    mu = OddPartition(sorted_parts(mu))
    if sum(mu) > n:
        raise ValueError(f"|μ| = {sum(mu)} exceeds level {n}")
    return _class_sum_scaled(mu, n)


def conjugation_orbit(h: HyperElement) -> set[HyperElement]:
    """Conjugacy class of h in B̂_n by BFS under conjugation by the generators."""
    gens = hyper_generators(h.n)
    seen = {h}
    queue = deque([h])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = g.conjugate(x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


@lru_cache(maxsize=None)
def _class_sum_full(mu: OddPartition) -> SergeevElement:
    n = sum(mu)
    orbit = conjugation_orbit(HyperElement.from_perm(distinguished_perm(mu, n)))
    return project_sum(orbit, n)


def class_sum_full(mu: Iterable[int], n: int | None = None) -> SergeevElement:
    """C_μ = π_n(Ĉ_{(μ,∅,0)}) for μ ∈ OP_n."""
    mu = OddPartition(sorted_parts(mu))
    if n is not None and sum(mu) != n:
        raise ValueError(f"class sums need |μ| = n, got |μ| = {sum(mu)}, n = {n}")
    return _class_sum_full(mu)


def class_orbit_size(mu: Iterable[int]) -> int:
    mu = OddPartition(sorted_parts(mu))
    n = sum(mu)
    return len(conjugation_orbit(HyperElement.from_perm(distinguished_perm(mu, n))))


def nonodd_class_sums(n: int) -> list[tuple[HyperElement, SergeevElement]]:
    """For every h ∈ B̂_n outside the (μ,∅,ε) classes, the projected full conjugation sum."""
    odd_classes = set()
    for mu in enumerate_odd(n):
        orbit = conjugation_orbit(HyperElement.from_perm(distinguished_perm(mu, n)))
        odd_classes |= orbit
        odd_classes |= {HyperElement.z(n) * g for g in orbit}
    group = hyper_group(n)
    out = []
    for h in group:
        if h in odd_classes:
            continue
        out.append((h, project_sum((g.conjugate(h) for g in group), n)))
    return out


# Idempotents and characters ---------------------------------------------------


@lru_cache(maxsize=None)
def _central_idempotent(lam: StrictPartition) -> SergeevElement:
    n = sum(lam)
    ell, delta = len(lam), length_parity(lam)
    scale = Fraction(count_shifted_tableaux(lam), factorial(n)) / Fraction(2) ** ((ell + delta) // 2)
    out = SergeevElement.zero(n)
    for mu in enumerate_odd(n):
        chi = character(lam, mu)
        if chi:
            out = out + class_sum_full(mu) * (scale * chi)
    return out


def central_idempotent(lam: Iterable[int]) -> SergeevElement:
    """e_λ = 2^{(-ℓ(λ)-δ(λ))/2} (g'_λ / n!) Σ_μ χ^λ(μ) C_μ."""
    return _central_idempotent(StrictPartition(sorted_parts(lam)))


class NotCentralError(ValueError):
    """The element does not act on the simple module by a scalar."""


def normalized_character(lam: Iterable[int], x: SergeevElement, check: bool = True) -> Fraction:
    """χ̃^λ(x) for even central x, read off from x·e_λ = χ̃^λ(x)·e_λ.

    With check=False only the identity coefficient of x·e_λ is formed, which
    is much cheaper but trusts that x is central.
    """
    lam = StrictPartition(sorted_parts(lam))
    if x.n != sum(lam):
        raise ValueError(f"level mismatch: element at level {x.n}, |λ| = {sum(lam)}")
    if not x.is_even():
        raise NotCentralError("normalized characters are only defined on even elements")
    e = central_idempotent(lam)
    e1 = e.identity_coefficient()
    if check:
        y = x * e
        value = y.identity_coefficient() / e1
        if y != e * value:
            raise NotCentralError("x·e_λ is not proportional to e_λ")
        return value
    lv = _level(x.n)
    total = Fraction(0)
    for (s, si), c in x.terms.items():
        sign, u, vi = _mono_inv(lv, s, si)
        coeff = e.terms.get((u, vi))
        if coeff:
            total += c * coeff * sign
    return total / e1


def up_moment_via_jm(k: int, lam: Iterable[int], check: bool = False) -> Fraction:
    """χ̃^λ(pr_n(J_{n+1}^{2k})), which equals the up moment 𝕞↑_k(λ)."""
    lam = StrictPartition(sorted_parts(lam))
    n = sum(lam)
    x = (jm_element(n + 1, n + 1) ** (2 * k)).pr(n)
    return normalized_character(lam, x, check=check)


def down_sum_via_jm(r: int, n: int) -> SergeevElement:
    """Σ_{x ∈ L_{n,n-1}} x J_n^r x^{-1}."""
    if n < 1:
        raise ValueError("need n >= 1")
    power = jm_element(n, n) ** r
    out = SergeevElement.zero(n)
    for g in coset_reps(n, n - 1):
        out = out + conjugate(g.project(), power)
    return out


def down_power_via_jm(r: int, lam: Iterable[int], check: bool = False) -> Fraction:
    """χ̃^λ of the down sum with exponent r; equals 𝕞↓_{r/2+1}(λ) for even r and 0 for odd r."""
    lam = StrictPartition(sorted_parts(lam))
    return normalized_character(lam, down_sum_via_jm(r, sum(lam)), check=check)


def down_moment_via_jm(k: int, lam: Iterable[int], check: bool = False) -> Fraction:
    """χ̃^λ(Σ_{x ∈ L_{n,n-1}} x J_n^{2(k-1)} x^{-1}), which equals 𝕞↓_k(λ)."""
    if k < 1:
        raise ValueError("down moments are indexed from k = 1")
    return down_power_via_jm(2 * (k - 1), lam, check=check)


def restriction_multiplicities(lam: Iterable[int]) -> dict[StrictPartition, int]:
    """Multiplicities m_ν with χ^λ(γ ∪ 1) = Σ_ν m_ν χ^ν(γ) for all γ ∈ OP_{n-1}."""
    lam = StrictPartition(sorted_parts(lam))
    n = sum(lam)
    if n < 1:
        raise ValueError("restriction needs |λ| >= 1")
    gammas, nus = enumerate_odd(n - 1), enumerate_strict(n - 1)
    rows = [[character(nu, g) for nu in nus] for g in gammas]
    rhs = [[character(lam, tuple(g) + (1,))] for g in gammas]
    try:
        sol = solve(rows, rhs)
    except SingularSystemError as exc:
        raise ArithmeticError(f"restriction system for {tuple(lam)} is singular") from exc
    out = {}
    for nu, (m,) in zip(nus, sol):
        if m.denominator != 1 or m < 0:
            raise ArithmeticError(f"non-integral multiplicity {m} for {tuple(nu)} in {tuple(lam)}")
        if m:
            out[nu] = int(m)
    return out


def branching_power(lam: StrictPartition, nu: StrictPartition) -> int:
    """2^{(2 + ℓ(ν) - δ(ν) - ℓ(λ) + δ(λ))/2}."""
    e = 2 + len(nu) - length_parity(nu) - len(lam) + length_parity(lam)
    return 2 ** (e // 2)


__all__ = [
    "Permutation",
    "SergeevMonomial",
    "SergeevElement",
    "HyperElement",
    "NotCentralError",
    "multiply",
    "inverse_monomial",
    "conjugate",
    "s_gen",
    "c_gen",
    "transposition",
    "perm_element",
    "jm_element",
    "hyper_generators",
    "hyper_group",
    "project_sum",
    "coset_reps",
    "coset_reps_projected",
    "distinguished_perm",
    "class_sum_scaled",
    "conjugation_orbit",
    "class_sum_full",
    "class_orbit_size",
    "nonodd_class_sums",
    "central_idempotent",
    "normalized_character",
    "up_moment_via_jm",
    "down_sum_via_jm",
    "down_power_via_jm",
    "down_moment_via_jm",
    "restriction_multiplicities",
    "branching_power",
]
