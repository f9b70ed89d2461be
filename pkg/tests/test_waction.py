import random

import pytest
import sympy

from twistedcenter import gamma, waction
from twistedcenter.gamma import GammaElement as G
from twistedcenter.partitions import odd_up_to
from twistedcenter.waction import D, LieElement as L


def pf(*parts):
    return gamma.pfrak(parts)


def test_a_minus_examples():
    assert waction.apply_A_minus(pf(3)) == pf(3, 1) * 2
    assert waction.apply_A_minus(G.scalar(1)) == pf(1) * 2
    assert waction.apply_A_minus(pf(1, 1)) == pf(1, 1, 1) * 2


def test_a_plus_examples():
    assert waction.apply_A_plus(pf(3)) == pf(3)
    assert waction.apply_A_plus(pf(1, 1)) == pf(1, 1) + pf(1) * 2
    assert waction.apply_A_plus(pf(1)) == pf(1) + 1


def test_omega03_examples():
    factor = pf(3) * -1 - pf(1, 1) * 2
    assert waction.apply_omega03(G.scalar(1)) == factor
    assert waction.apply_omega03(pf(1)) == factor * pf(1)
    assert waction.apply_omega03(pf(3) + pf(1)) == waction.apply_omega03(pf(3)) + waction.apply_omega03(pf(1))


def test_omega03_commutes_with_multiplication():
    for g in (pf(1), pf(1, 1), pf(3)):
        for f in (G.scalar(1), pf(1), pf(1, 1)):
            assert waction.apply_omega03(g * f) == g * waction.apply_omega03(f)


def test_b_examples():
    assert waction.apply_B(3, pf(1)) == pf(3, 1) * 2
    assert waction.apply_B(5, G.scalar(1)) == pf(5) * 2
    assert waction.apply_B(3, pf(3)) == pf(3, 3) * 2
    with pytest.raises(ValueError):
        waction.b_op(4)
    with pytest.raises(ValueError):
        waction.b_op(1)


def test_cutoff_enforced():
    with pytest.raises(waction.CutoffExceeded):
        waction.apply_A_minus(pf(3, 3, 1, 1), cutoff=8)
    with pytest.raises(waction.CutoffExceeded):
        waction.a_plus(4).column((5,))


def test_a_commutator_is_minus_two():
    am, ap = waction.a_minus(8), waction.a_plus(8)
    assert waction.commutator(am, ap).equals(waction.identity_operator(8) * -2, 7)


def test_b_commutes_with_a_plus():
    ap = waction.a_plus(8)
    for m in (3, 5):
        assert waction.commutator(waction.b_op(m, 8), ap).is_zero(8 - m)


def test_omega_normalization():
    """ω_{±1,0} carry a factor 1/√2 relative to A±, so [ω_{-1,0}, ω_{1,0}] = -1."""
    wm, wp = waction.omega(-1, 0), waction.omega(1, 0)
    comm = waction.commutator(wm, wp)
    assert comm.sqrt2 == -2
    assert comm.equals(waction.identity_operator() * -1, 7)
    with pytest.raises(ValueError):
        waction.omega(2, 2)


def test_derived_operators_are_linear_with_bounded_degree():
    for name in waction.DERIVED:
        op = waction.derived_operator(name)
        for mu in odd_up_to(3):
            col = op.column(mu)
            assert all(sum(nu) <= sum(mu) + 5 for nu in col)
        assert op.apply_coords({(1,): 2, (3,): -1}) == {
            k: v for k, v in _combine(op.column((1,)), 2, op.column((3,)), -1).items() if v}


def _combine(a, x, b, y):
    out = {}
    for col, s in ((a, x), (b, y)):
        for k, v in col.items():
            out[k] = out.get(k, 0) + v * s
    return out


def test_operator_lookup():
    for name in waction.GENERATORS:
        assert waction.operator_by_name(name) is not None
    with pytest.raises(ValueError):
        waction.operator_by_name("bogus")


def test_bracket_examples():
    assert waction.bracket(L.t(1), L.t(-1)) == L.c(1)
    f = L.t(0, D)
    g = L.t(0, D ** 3 - D)
    assert not waction.bracket(f, g)


def test_jacobi_outside_parity_condition():
    x, y, z = L.t(1), L.t(-1, D ** 2, check=False), L.t(0, D)
    assert not waction.jacobi(x, y, z)


def test_parity_condition():
    assert waction.satisfies_parity(1, 1)
    assert not waction.satisfies_parity(-1, D ** 2)
    assert waction.satisfies_parity(0, D)
    assert not waction.satisfies_parity(0, 1)
    with pytest.raises(ValueError):
        L.t(0, 1)


def test_bracket_preserves_parity():
    rng = random.Random(4)
    for _ in range(30):
        x, y = waction.random_lie_element(rng), waction.random_lie_element(rng)
        for r, f in waction.bracket(x, y).terms.items():
            assert waction.satisfies_parity(r, f)


def test_jacobi_and_antisymmetry_random():
    rng = random.Random(0)
    for _ in range(50):
        x, y, z = (waction.random_lie_element(rng) for _ in range(3))
        assert not waction.jacobi(x, y, z)
        assert waction.bracket(x, y) == -waction.bracket(y, x)


def test_cocycle_is_antisymmetric():
    f, g = sympy.Poly(D + 1, D), sympy.Poly(D ** 2, D)
    for r in range(-3, 4):
        assert waction.cocycle(r, f, -r, g) == -waction.cocycle(-r, g, r, f)
