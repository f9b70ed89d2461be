"""
Verification suites and table export.

Each suite checks one family of exact identities and returns a VerifyReport
listing every failed case with both sides of the failed equality.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from pathlib import Path
from typing import Callable

from . import center, gamma, schur_graph, sergeev, waction
from .partitions import (
    contains,
    enumerate_odd,
    enumerate_strict,
    length_parity,
    odd_up_to,
    pad_ones,
    path_count,
    strict_up_to,
    z_stat,
)
from .serialization import pair_key, partition_key

SERGEEV_MAX = 5
MAX_RECORDED_FAILURES = 25


@dataclass
class VerifyReport:
    suite: str
    cases: int = 0
    failures: list = field(default_factory=list)
    failure_count: int = 0
    wall_time: float = 0.0
    params: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def check(self, condition: bool, case, lhs=None, rhs=None) -> bool:
        self.cases += 1
        if not condition:
            self.failure_count += 1
            if len(self.failures) < MAX_RECORDED_FAILURES:
                self.failures.append({"case": str(case), "lhs": str(lhs), "rhs": str(rhs)})
        return condition

    def equal(self, lhs, rhs, case) -> bool:
        return self.check(lhs == rhs, case, lhs, rhs)

    def to_json(self) -> dict:
        return {"suite": self.suite, "cases": self.cases, "failures": self.failure_count,
                "failed_cases": self.failures, "wall_time": round(self.wall_time, 3),
                "params": self.params}


# Suites ------------------------------------------------------------------------


def suite_path_count(r: VerifyReport, n_max: int, cutoff: int, rng) -> None:
    bound = max(10, n_max)
    r.params["max_size"] = bound
    for lam in strict_up_to(bound):
        r.equal(schur_graph.path_count_dp(lam), path_count(lam), lam)


def suite_coherence(r: VerifyReport, n_max: int, cutoff: int, rng) -> None:
    bound = max(8, n_max)
    r.params["max_level"] = bound
    pl = {n: schur_graph.plancherel(n) for n in range(bound + 1)}
    for n in range(bound + 1):
        r.equal(sum(pl[n].values(), Fraction(0)), Fraction(1), f"normalization n={n}")
    for n in range(1, bound + 1):
        for nu in enumerate_strict(n - 1):
            total = sum((schur_graph.down_transition(lam, nu) * pl[n][lam] for lam in enumerate_strict(n)),
                        Fraction(0))
            r.equal(total, pl[n - 1][nu], f"coherence n={n} ν={tuple(nu)}")
    for lam in strict_up_to(max(9, bound)):
        if lam:
            r.equal(schur_graph.down_row(lam).total(), Fraction(1), f"down row {tuple(lam)}")
    for nu in strict_up_to(bound):
        r.equal(schur_graph.up_row(nu).total(), Fraction(1), f"up row {tuple(nu)}")
    for n in range(bound):
        for nu in enumerate_strict(n):
            for lam in schur_graph.up_row(nu).targets:
                lhs = schur_graph.up_transition(nu, lam)
                rhs = pl[n + 1][lam] / pl[n][nu] * schur_graph.down_transition(lam, nu)
                r.equal(lhs, rhs, f"detailed balance ν={tuple(nu)} λ={tuple(lam)}")


def suite_petrov(r: VerifyReport, n_max: int, cutoff: int, rng) -> None:
    bound = max(8, n_max)
    r.params["max_size"] = bound
    up, down = schur_graph.up_moment, schur_graph.down_moment
    for lam in strict_up_to(bound):
        for k in range(1, 6):
            rhs = down(k, lam) + sum((up(i, lam) * down(k - i, lam) for i in range(1, k)), Fraction(0))
            r.equal(up(k, lam), rhs, f"λ={tuple(lam)} k={k}")


def _sergeev_bound(n_max: int) -> int:
    return min(n_max, SERGEEV_MAX)


def suite_jm_moments(r: VerifyReport, n_max: int, cutoff: int, rng) -> None:
    bound = _sergeev_bound(n_max)
    r.params["max_level"] = bound
    for lam in strict_up_to(bound):
        for k in range(0, 4):
            r.equal(sergeev.up_moment_via_jm(k, lam, check=True), schur_graph.up_moment(k, lam),
                    f"up λ={tuple(lam)} k={k}")
        if not lam:
            continue
        for k in range(1, 4):
            r.equal(sergeev.down_moment_via_jm(k, lam, check=True), schur_graph.down_moment(k, lam),
                    f"down λ={tuple(lam)} k={k}")
        for odd in (1, 3, 5):
            r.equal(sergeev.down_power_via_jm(odd, lam, check=True), Fraction(0),
                    f"odd power λ={tuple(lam)} r={odd}")


def suite_characters(r: VerifyReport, n_max: int, cutoff: int, rng) -> None:
    bound = _sergeev_bound(n_max)
    dim_bound = max(8, n_max)
    r.params.update(max_level=bound, dimension_level=dim_bound)
    for n in range(bound + 1):
        lams = enumerate_strict(n)
        es = {lam: sergeev.central_idempotent(lam) for lam in lams}
        total = sergeev.SergeevElement.zero(n)
        for e in es.values():
            total = total + e
        r.equal(total, sergeev.SergeevElement.identity(n), f"Σ e_λ = 1 at n={n}")
        for a in lams:
            for b in lams:
                prod = es[a] * es[b]
                want = es[a] if a == b else sergeev.SergeevElement.zero(n)
                r.check(prod == want, f"e_{tuple(a)} e_{tuple(b)} at n={n}", f"{len(prod)} terms",
                        f"{len(want)} terms")
    for n in range(dim_bound + 1):
        r.check(gamma.check_x_matrix(gamma.x_matrix(n)), f"X-matrix relations n={n}")
        total = Fraction(0)
        for lam in enumerate_strict(n):
            dim = gamma.dimension(lam)
            r.equal(gamma.character(lam, (1,) * n), dim, f"χ^{tuple(lam)}(1^{n})")
            total += Fraction(dim * dim, 2 ** length_parity(lam))
        r.equal(total, 2 ** n * factorial(n), f"Σ dim²/2^δ at n={n}")


def suite_class_sums(r: VerifyReport, n_max: int, cutoff: int, rng) -> None:
    """The scalar relation and the vanishing statement, checked as stated."""
    bound = _sergeev_bound(n_max)
    r.params.update(max_level=bound, vanishing_level=min(3, bound))
    for n in range(bound + 1):
        for k in range(n + 1):
            for mu in enumerate_odd(k):
                full = pad_ones(mu, n)
                scale = Fraction(2) ** (k - n + len(mu)) * z_stat(full) / factorial(n - k)
                a = sergeev.class_sum_scaled(mu, n)
                c = sergeev.class_sum_full(full)
                ratio = a.identity_coefficient() / c.identity_coefficient() if c.identity_coefficient() else None
                r.check(a == c * scale, f"a_{tuple(mu)}^({n}) vs C_{tuple(full)}",
                        f"a = {ratio}·C" if ratio is not None else f"{len(a)} terms", f"{scale}·C")
    for n in range(1, min(3, bound) + 1):
        for h, total in sergeev.nonodd_class_sums(n):
            r.check(not total, f"n={n} h=(z^{h.zbit}, a-mask {h.mask:b}, perm {list(h.permutation())})",
                    f"{len(total)} terms", "0")


def suite_class_sums_corrected(r: VerifyReport, n_max: int, cutoff: int, rng) -> None:
    """Corrected forms: scalar 2^{ℓ(μ)} z/(n-k)!, vanishing for even h, odd exceptions are split (∅,λ) classes."""
    bound = _sergeev_bound(n_max)
    r.params.update(max_level=bound, vanishing_level=min(3, bound))
    for n in range(bound + 1):
        for k in range(n + 1):
            for mu in enumerate_odd(k):
                full = pad_ones(mu, n)
                scale = Fraction(2) ** len(mu) * z_stat(full) / factorial(n - k)
                r.equal(sergeev.class_sum_scaled(mu, n), sergeev.class_sum_full(full) * scale,
                        f"a_{tuple(mu)}^({n})")
    for n in range(1, min(3, bound) + 1):
        for h, total in sergeev.nonodd_class_sums(n):
            pos, neg = signed_cycle_type(h)
            even = bin(h.mask).count("1") % 2 == 0
            exceptional = not even and not pos and len(neg) % 2 == 1 and len(set(neg)) == len(neg)
            r.check(bool(total) == exceptional, f"n={n} h=(z^{h.zbit}, mask {h.mask:b}, perm {list(h.permutation())})",
                    "nonzero" if total else "zero", "nonzero" if exceptional else "zero")


def signed_cycle_type(h: sergeev.HyperElement) -> tuple[tuple, tuple]:
    """(ρ₊, ρ₋): cycle lengths of the underlying permutation split by the parity of a's on each cycle."""
    p = h.permutation()
    seen, pos, neg = set(), [], []
    for start in range(1, h.n + 1):
        if start in seen:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = p(x)
        count = sum(1 for i in cyc if h.mask >> (i - 1) & 1)
        (neg if count % 2 else pos).append(len(cyc))
    return tuple(sorted(pos, reverse=True)), tuple(sorted(neg, reverse=True))


def suite_intertwining(r: VerifyReport, n_max: int, cutoff: int, rng) -> None:
    bound = _sergeev_bound(n_max)
    r.params["max_level"] = bound
    for n in range(bound + 1):
        for mu in odd_up_to(n):
            image = center.fock_image(center.alpha_of_partition(mu), n)
            r.check(image == sergeev.class_sum_scaled(mu, n), f"F_{n}(α_{tuple(mu)}) = a_μ^({n})",
                    f"{len(image)} terms", "a_μ")
            for lam in enumerate_strict(n):
                lhs = sergeev.normalized_character(lam, image)
                rhs = gamma.pfrak(mu).evaluate(lam) * 2 ** len(mu)
                r.equal(lhs, rhs, f"μ={tuple(mu)} λ={tuple(lam)}")


def suite_bubbles(r: VerifyReport, n_max: int, cutoff: int, rng) -> None:
    bound = _sergeev_bound(n_max)
    eval_bound = max(8, n_max)
    r.params.update(max_level=bound, eval_size=eval_bound)
    for k in range(4):
        up_img = center.phi(center.dbar(k))
        down_img = center.phi(center.d(2 * k))
        r.equal(up_img, gamma.moment_up_gamma(k), f"φ(d̄_{2 * k}) = 𝕞↑_{k} in Γ")
        r.equal(down_img, gamma.moment_down_gamma(k + 1), f"φ(d_{2 * k}) = 𝕞↓_{k + 1} in Γ")
        for lam in strict_up_to(eval_bound):
            r.equal(up_img.evaluate(lam), schur_graph.up_moment(k, lam), f"φ(d̄_{2 * k})({tuple(lam)})")
            r.equal(down_img.evaluate(lam), schur_graph.down_moment(k + 1, lam), f"φ(d_{2 * k})({tuple(lam)})")
    for n in range(bound + 1):
        for k in range(4):
            lhs = center.fock_dbar(k, n)
            rhs = center.fock_image(center.dbar(k), n)
            r.check(lhs == rhs, f"F_{n}(d̄_{2 * k}) recursion", f"{len(lhs)} terms", f"{len(rhs)} terms")


def suite_idempotent_closure(r: VerifyReport, n_max: int, cutoff: int, rng) -> None:
    bound = _sergeev_bound(n_max)
    eval_bound = max(8, n_max)
    r.params.update(max_size=bound, eval_size=eval_bound)
    points = strict_up_to(eval_bound)
    for lam in strict_up_to(bound):
        lhs = center.idempotent_closure(lam)
        rhs = center.idempotent_closure_expected(lam)
        r.equal(lhs, rhs, f"closure(e_{tuple(lam)}) in Γ")
        for nu in points:
            r.equal(lhs.evaluate(nu), rhs.evaluate(nu), f"closure(e_{tuple(lam)})({tuple(nu)})")


def suite_branching(r: VerifyReport, n_max: int, cutoff: int, rng) -> None:
    bound = _sergeev_bound(n_max)
    r.params["max_level"] = bound
    for n in range(1, bound + 1):
        for lam in enumerate_strict(n):
            mult = sergeev.restriction_multiplicities(lam)
            for nu in enumerate_strict(n - 1):
                edge = schur_graph.edge_multiplicity(nu, lam) > 0
                want = sergeev.branching_power(lam, nu) if edge else 0
                r.equal(mult.get(nu, 0), want, f"[{tuple(lam)} ↓ {tuple(nu)}]")
            total = sum(m * gamma.dimension(nu) for nu, m in mult.items())
            r.equal(total, gamma.dimension(lam), f"dimension bookkeeping {tuple(lam)}")


def suite_w_action(r: VerifyReport, n_max: int, cutoff: int, rng) -> None:
    r.params.update(cutoff=cutoff, random_triples=50)
    ident = waction.identity_operator(cutoff)
    am, ap = waction.a_minus(cutoff), waction.a_plus(cutoff)
    comm = waction.commutator(am, ap)
    for mu in odd_up_to(cutoff - 1):
        r.equal(comm.column(mu), (ident * -2).column(mu), f"[A-,A+] on 𝔭_{tuple(mu)}")
    for m in (3, 5):
        comm = waction.commutator(waction.b_op(m, cutoff), ap)
        for mu in odd_up_to(cutoff - m):
            r.equal(comm.column(mu), {}, f"[B{m},A+] on 𝔭_{tuple(mu)}")
    for i in range(50):
        x, y, z = (waction.random_lie_element(rng) for _ in range(3))
        r.check(not waction.jacobi(x, y, z), f"Jacobi triple {i}", waction.jacobi(x, y, z), 0)
        r.equal(waction.bracket(x, y), -waction.bracket(y, x), f"antisymmetry triple {i}")


def suite_qstar(r: VerifyReport, n_max: int, cutoff: int, rng) -> None:
    r.params.update(vanishing_size=6, degree_size=cutoff)
    for lam in strict_up_to(6):
        q = gamma.factorial_schur_q(lam)
        for nu in strict_up_to(6):
            if not contains(nu, lam):
                r.equal(q.evaluate(nu), Fraction(0), f"Q*_{tuple(lam)}({tuple(nu)})")
    for mu in odd_up_to(cutoff):
        r.check((gamma.pfrak(mu) - gamma.GammaElement.p(mu)).degree() < sum(mu), f"deg(𝔭_{tuple(mu)} - p)")
    for lam in strict_up_to(cutoff):
        diff = gamma.factorial_schur_q(lam) - gamma.schur_q(lam)
        r.check(diff.degree() < sum(lam), f"deg(Q*_{tuple(lam)} - Q)", diff.degree(), f"< {sum(lam)}")
    odd = odd_up_to(cutoff)
    for i, mu in enumerate(odd):
        for gm in odd[i:]:
            if sum(mu) + sum(gm) > cutoff:
                continue
            union = tuple(sorted(mu + gm, reverse=True))
            diff = gamma.pfrak(mu) * gamma.pfrak(gm) - gamma.pfrak(union)
            r.check(diff.degree() < sum(union), f"𝔭_{tuple(mu)}𝔭_{tuple(gm)} - 𝔭_{union}",
                    diff.degree(), f"< {sum(union)}")


SUITES: dict[str, Callable] = {
    "path-count": suite_path_count,
    "coherence": suite_coherence,
    "petrov": suite_petrov,
    "jm-moments": suite_jm_moments,
    "characters": suite_characters,
    "class-sums": suite_class_sums,
    "intertwining": suite_intertwining,
    "bubbles": suite_bubbles,
    "idempotent-closure": suite_idempotent_closure,
    "branching": suite_branching,
    "w-action": suite_w_action,
    "qstar": suite_qstar,
}
EXTRA_SUITES: dict[str, Callable] = {
    "class-sums-corrected": suite_class_sums_corrected,
}
ALL_SUITES = {**SUITES, **EXTRA_SUITES}


def run_suite(name: str, n_max: int = SERGEEV_MAX, degree_cutoff: int = waction.DEFAULT_CUTOFF,
              seed: int = 0) -> VerifyReport:
    if name not in ALL_SUITES:
        raise ValueError(f"unknown suite {name!r}; expected one of {sorted(ALL_SUITES)} or 'all'")
    report = VerifyReport(name)
    start = time.perf_counter()
    ALL_SUITES[name](report, n_max, degree_cutoff, random.Random(seed))
    report.wall_time = time.perf_counter() - start
    return report


def run_verify(suites, n_max: int = SERGEEV_MAX, degree_cutoff: int = waction.DEFAULT_CUTOFF,
               seed: int = 0) -> list[VerifyReport]:
    """Run the named suites ("all" expands to the acceptance suites), in a fixed order."""
    if isinstance(suites, str):
        suites = [suites]
    names: list[str] = []
    for s in suites:
        expanded = list(SUITES) if s == "all" else [s]
        for name in expanded:
            if name not in ALL_SUITES:
                raise ValueError(f"unknown suite {name!r}; expected one of {sorted(ALL_SUITES)} or 'all'")
            if name not in names:
                names.append(name)
    return [run_suite(name, n_max, degree_cutoff, seed) for name in names]


def reset_caches() -> None:
    """Clear every in-process memo, so timings start cold."""
    from . import gamma as g, partitions as p, schur_graph as sg, sergeev as se, center as c

    for module in (p, sg, g, se, c):
        for obj in vars(module).values():
            if hasattr(obj, "cache_clear"):
                obj.cache_clear()


# Export ---------------------------------------------------------------------------

EXPORT_KINDS = ("characters", "x-matrix", "transitions", "plancherel")


def export_table(kind: str, n: int) -> dict:
    """Deterministic table keyed by partitions in canonical order."""
    if kind == "plancherel":
        return {partition_key(lam): str(p) for lam, p in schur_graph.plancherel(n).items()}
    if kind == "x-matrix":
        x = gamma.x_matrix(n)
        return {pair_key(mu, lam): str(x[mu, lam]) for mu in x.rows for lam in x.cols}
    if kind == "characters":
        return {pair_key(lam, mu): str(gamma.character(lam, mu))
                for lam in enumerate_strict(n) for mu in enumerate_odd(n)}
    if kind == "transitions":
        out = {}
        for lam in enumerate_strict(n):
            row = schur_graph.up_row(lam)
            out[partition_key(lam)] = {partition_key(t): str(p) for t, p in row.targets.items()}
        return out
    raise ValueError(f"unknown export kind {kind!r}; expected one of {EXPORT_KINDS}")


def write_table(kind: str, n: int, path) -> Path:
    path = Path(path)
    path.write_text(json.dumps(export_table(kind, n), indent=2, ensure_ascii=False) + "\n")
    return path


__all__ = [
    "VerifyReport",
    "SUITES",
    "EXTRA_SUITES",
    "ALL_SUITES",
    "run_suite",
    "run_verify",
    "reset_caches",
    "signed_cycle_type",
    "EXPORT_KINDS",
    "export_table",
    "write_table",
]
