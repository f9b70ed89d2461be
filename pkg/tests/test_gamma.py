from fractions import Fraction as F
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistedcenter import gamma
from twistedcenter.gamma import GammaElement as G
from twistedcenter.partitions import (
    contains,
    count_shifted_tableaux,
    enumerate_odd,
    enumerate_strict,
    length_parity,
    odd_up_to,
    strict_up_to,
    z_stat,
)


def p(*parts):
    return G.p(parts)


def test_products_of_power_sums():
    assert p(1) * p(1) == p(1, 1)
    assert p(3) * p(1, 1) == p(3, 1, 1)
    assert (p(1) + p(3)) * p(1) == p(1, 1) + p(3, 1)


def test_evaluation():
    assert p(1).evaluate((3, 1)) == 4
    assert p(3).evaluate((2, 1)) == 9
    assert p(3, 1).evaluate((3,)) == 81
    assert G.scalar(5).evaluate(()) == 5


def test_q_series():
    assert gamma.q_series(0) == G.scalar(1)
    assert gamma.q_series(1) == p(1) * 2
    assert gamma.q_series(2) == p(1, 1) * 2


def test_schur_q():
    assert gamma.schur_q(()) == G.scalar(1)
    assert gamma.schur_q((2,)) == p(1, 1) * 2
    q21 = gamma.schur_q((2, 1))
    assert q21 == (p(1, 1, 1) - p(3)) * F(4, 3)
    assert q21.degree() == 3


def test_x_matrix_relations():
    for n in range(9):
        assert gamma.check_x_matrix(gamma.x_matrix(n))


def test_x_matrix_json_round_trip():
    x = gamma.x_matrix(5)
    y = gamma.CharacterMatrix.from_json(5, x.to_json())
    assert y.as_rows() == x.as_rows()


def test_character_examples():
    assert gamma.character((2,), (1, 1)) == 4
    assert gamma.character((2, 1), (1, 1, 1)) == 4
    assert gamma.character((3,), (1, 1, 1)) == 8
    with pytest.raises(ValueError):
        gamma.character((2,), (1,))


def test_dimension_identity():
    for n in range(9):
        total = 0
        for lam in enumerate_strict(n):
            d = gamma.dimension(lam)
            assert gamma.character(lam, (1,) * n) == d
            assert d == 2 ** (n - (len(lam) - length_parity(lam)) // 2) * count_shifted_tableaux(lam)
            total += F(d * d, 2 ** length_parity(lam))
        assert total == 2 ** n * factorial(n)


def test_character_orthogonality():
    """Column orthogonality of the spin character table: Σ_μ χ^λ(μ)χ^ν(μ)/z_μ 2^{-ℓ(μ)} ∝ δ."""
    for n in range(1, 8):
        lams = enumerate_strict(n)
        for a in lams:
            for b in lams:
                s = sum(gamma.character(a, mu) * gamma.character(b, mu) / (z_stat(mu) * 2 ** len(mu))
                        for mu in enumerate_odd(n))
                if a != b:
                    assert s == 0
                else:
                    assert s > 0


def test_pfrak_examples():
    assert gamma.pfrak((1,)) == p(1)
    assert gamma.pfrak((1, 1)) == p(1, 1) - p(1)
    assert gamma.pfrak((3,)) == p(3) - p(1, 1) * 3 + p(1) * 2
    assert gamma.pfrak(()) == G.scalar(1)


def test_pfrak_values_reproduced():
    for mu in odd_up_to(6):
        f = gamma.pfrak(mu)
        for lam in strict_up_to(8):
            assert f.evaluate(lam) == gamma.pfrak_value(mu, lam)


def test_factorial_schur_examples():
    assert gamma.factorial_schur_q(()) == G.scalar(1)
    assert gamma.factorial_schur_q((1,)) == p(1) * 2
    q2 = gamma.factorial_schur_q((2,))
    assert q2 == p(1, 1) * 2 - p(1) * 2
    assert q2.evaluate((1,)) == 0


def test_factorial_schur_vanishing():
    for lam in strict_up_to(6):
        q = gamma.factorial_schur_q(lam)
        for nu in strict_up_to(6):
            if not contains(nu, lam):
                assert q.evaluate(nu) == 0


def test_factorial_schur_against_n_variable_oracle():
    """Symmetrization in N variables, evaluated at ν padded with zeros (every ν below has ℓ ≤ 3)."""
    for lam in strict_up_to(4):
        q = gamma.factorial_schur_q(lam)
        for nvars in range(1, 5):
            for nu in strict_up_to(6):
                if len(nu) <= nvars:
                    assert gamma.evaluate_nvar(lam, nvars, nu) == q.evaluate(nu)


def test_top_terms():
    for mu in odd_up_to(8):
        assert (gamma.pfrak(mu) - G.p(mu)).degree() < sum(mu)
    for lam in strict_up_to(8):
        assert (gamma.factorial_schur_q(lam) - gamma.schur_q(lam)).degree() < sum(lam)


def test_product_property():
    odd = odd_up_to(8)
    for mu in odd:
        for nu in odd:
            if sum(mu) + sum(nu) <= 8:
                union = tuple(sorted(mu + nu, reverse=True))
                assert (gamma.pfrak(mu) * gamma.pfrak(nu) - gamma.pfrak(union)).degree() < sum(union)


def test_moments_in_gamma():
    assert gamma.moment_up_gamma(0) == G.scalar(1)
    assert gamma.moment_up_gamma(2) == p(3) * 2 + p(1, 1) * 2
    assert gamma.moment_down_gamma(1) == p(1) * 2
    assert gamma.moment_down_gamma(2) == p(3) * 2 - p(1, 1) * 2
    with pytest.raises(ValueError):
        gamma.moment_down_gamma(0)


def test_change_of_basis_examples():
    assert gamma.to_basis(p(1), "pfrak") == {(1,): 1}
    assert gamma.to_basis(p(1, 1), "pfrak") == {(1, 1): 1, (1,): 1}
    assert gamma.to_basis(gamma.schur_q((2,)), "Q") == {(2,): 1}
    with pytest.raises(ValueError):
        gamma.to_basis(p(1), "bogus")


@settings(max_examples=40, deadline=None)
@given(st.dictionaries(st.sampled_from(odd_up_to(6)), st.fractions(max_denominator=9), max_size=5),
       st.sampled_from(gamma.BASES))
def test_basis_round_trip(coeffs, basis):
    f = G(coeffs)
    assert gamma.from_basis(gamma.to_basis(f, basis), basis) == f


@settings(max_examples=40, deadline=None)
@given(st.dictionaries(st.sampled_from(odd_up_to(4)), st.integers(-5, 5), max_size=4),
       st.dictionaries(st.sampled_from(odd_up_to(4)), st.integers(-5, 5), max_size=4),
       st.sampled_from(strict_up_to(7)))
def test_evaluation_is_multiplicative(a, b, lam):
    f, g = G(a), G(b)
    assert (f * g).evaluate(lam) == f.evaluate(lam) * g.evaluate(lam)
    assert (f + g).evaluate(lam) == f.evaluate(lam) + g.evaluate(lam)
