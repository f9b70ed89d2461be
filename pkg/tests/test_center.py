import random
from fractions import Fraction as F

import pytest

from twistedcenter import center, gamma, schur_graph, sergeev
from twistedcenter.center import CenterElement as C
from twistedcenter.gamma import GammaElement as G
from twistedcenter.partitions import enumerate_strict, odd_up_to, path_count, strict_up_to


def test_generator_validation():
    with pytest.raises(ValueError):
        center.alpha(2)
    with pytest.raises(ValueError):
        center.d(1)
    with pytest.raises(ValueError):
        C("beta")


def test_phi_examples():
    assert center.phi(center.alpha(1)) == G.p((1,)) * 2
    assert center.phi(center.d(0)) == G.p((1,)) * 2
    assert center.phi(center.dbar(0)) == G.scalar(1)


def test_alpha_of_partition():
    assert center.alpha_of_partition(()) == C.scalar("alpha", 1)
    assert center.alpha_of_partition((1,)) == center.alpha(1)
    a1, a3 = center.alpha(1), center.alpha(3)
    assert center.alpha_of_partition((3, 1)) == a1 * a3 - a3 * 6
    with pytest.raises(ValueError):
        center.alpha_of_partition((2,))
    for nu in odd_up_to(7):
        assert center.phi(center.alpha_of_partition(nu)) == gamma.pfrak(nu) * 2 ** len(nu)


def test_alpha_adding_a_fixed_point():
    """φ(α_(μ,1)) = φ(α_μ)φ(α_1) - 2|μ|φ(α_μ), checked by evaluation on |λ| ≤ 8."""
    points = strict_up_to(8)
    for mu in odd_up_to(5):
        lhs = center.phi(center.alpha_of_partition(tuple(mu) + (1,)))
        base = center.phi(center.alpha_of_partition(mu))
        rhs = base * center.phi(center.alpha(1)) - base * (2 * sum(mu))
        for lam in points:
            assert lhs.evaluate(lam) == rhs.evaluate(lam)


def test_dbar_examples():
    d0, d2 = center.d(0), center.d(2)
    assert center.dbar(0) == C.scalar("d", 1)
    assert center.dbar(1) == d0
    assert center.dbar(2) == d2 + d0 * d0


def test_grade():
    assert center.grade(center.d(0)) == 0
    assert center.grade(center.d(2)) == 3
    assert center.grade(center.d(2) * center.d(4)) == 8


def test_alpha_leading_terms():
    assert center.phi(center.alpha(1)) == center.phi(center.d(0))
    for k in range(4):
        assert center.alpha_leading_term_check(k)
        assert center.alpha_grade_check(k)


def test_chart_round_trip():
    rng = random.Random(5)
    for _ in range(20):
        x = C("alpha", {tuple(sorted(rng.choice([1, 3, 5]) for _ in range(rng.randint(0, 2)))): rng.randint(-3, 3)
                        for _ in range(3)})
        y = center.to_chart(x, "d")
        assert y.chart == "d"
        assert center.phi(y) == center.phi(x)
        assert center.to_chart(y, "alpha") == x


def test_phi_is_multiplicative():
    rng = random.Random(9)
    gens = [center.alpha(1), center.alpha(3), center.d(0), center.d(2), center.dbar(2)]
    for _ in range(15):
        x = rng.choice(gens) * rng.randint(1, 3) + rng.choice(gens)
        y = rng.choice(gens) - rng.choice(gens) * F(1, 2)
        assert center.phi(x * y) == center.phi(x) * center.phi(y)


def test_phi_images_are_independent():
    """Top terms of φ(α_(2k+1)) are 2p_(2k+1), so the images are triangular and independent."""
    for k in range(4):
        top = center.phi(center.alpha(2 * k + 1)).top()
        assert top == G.p((2 * k + 1,)) * 2


def test_fock_examples():
    assert center.fock_image(center.alpha(3), 3) == sergeev.class_sum_scaled((3,), 3)
    assert not center.fock_image(center.alpha(3), 2)
    for n in range(1, 6):
        assert center.fock_image(center.d(0), n) == sergeev.SergeevElement.identity(n) * (2 * n)


def test_fock_is_multiplicative():
    rng = random.Random(2)
    gens = [center.alpha(1), center.alpha(3), center.d(0), center.d(2)]
    for _ in range(10):
        n = rng.randint(1, 4)
        x, y = rng.choice(gens), rng.choice(gens) + rng.choice(gens)
        assert center.fock_image(x * y, n) == center.fock_image(x, n) * center.fock_image(y, n)


def test_intertwining_on_generators():
    gens = [center.alpha(1), center.alpha(3), center.alpha(5), center.d(0), center.d(2), center.dbar(1)]
    for n in range(1, 6):
        for x in gens:
            image, value = center.fock_image(x, n), center.phi(x)
            for lam in enumerate_strict(n):
                assert sergeev.normalized_character(lam, image) == value.evaluate(lam)


def test_intertwining_on_closures():
    for n in range(6):
        for mu in odd_up_to(n):
            image = center.fock_image(center.alpha_of_partition(mu), n)
            assert image == sergeev.class_sum_scaled(mu, n)
            for lam in enumerate_strict(n):
                assert sergeev.normalized_character(lam, image) == gamma.pfrak(mu).evaluate(lam) * 2 ** len(mu)


def test_bubbles_are_moments():
    for k in range(4):
        up, down = center.phi(center.dbar(k)), center.phi(center.d(2 * k))
        assert up == gamma.moment_up_gamma(k)
        assert down == gamma.moment_down_gamma(k + 1)
        for lam in strict_up_to(8):
            assert up.evaluate(lam) == schur_graph.up_moment(k, lam)
            assert down.evaluate(lam) == schur_graph.down_moment(k + 1, lam)


def test_bubble_recursion_in_fock_images():
    for n in range(6):
        for k in range(4):
            assert center.fock_dbar(k, n) == center.fock_image(center.dbar(k), n)


def test_idempotent_closure_examples():
    assert center.idempotent_closure((1,)) == G.p((1,)) * 2
    assert center.idempotent_closure((2,)) == gamma.factorial_schur_q((2,)) * 2
    assert center.idempotent_closure((2, 1)) == gamma.factorial_schur_q((2, 1)) * 2


def test_idempotent_closure():
    points = strict_up_to(8)
    for lam in strict_up_to(5):
        got = center.idempotent_closure(lam)
        want = gamma.factorial_schur_q(lam) * path_count(lam)
        assert got == want
        for nu in points:
            assert got.evaluate(nu) == want.evaluate(nu)


def test_class_sum_coordinates_reject_noncentral():
    with pytest.raises(ValueError):
        center.class_sum_coordinates(sergeev.s_gen(1, 3))


def test_to_json():
    data = center.alpha_of_partition((3, 1)).to_json()
    assert data["chart"] == "alpha"
