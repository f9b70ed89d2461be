from fractions import Fraction as F

import pytest

from twistedcenter import schur_graph as sg
from twistedcenter.partitions import StrictPartition as SP
from twistedcenter.partitions import enumerate_strict, path_count, strict_up_to


def test_edge_multiplicity():
    assert sg.edge_multiplicity(SP((2, 1)), SP((3, 1))) == 2
    assert sg.edge_multiplicity(SP((2,)), SP((2, 1))) == 1
    assert sg.edge_multiplicity(SP((2,)), SP((4,))) == 0


def test_path_count_dp_matches_formula():
    for lam in strict_up_to(10):
        assert sg.path_count_dp(lam) == path_count(lam)


def test_down_transition_examples():
    assert sg.down_transition(SP((3, 1)), SP((2, 1))) == F(1, 2)
    assert sg.down_transition(SP((3, 1)), SP((3,))) == F(1, 2)
    assert sg.down_transition(SP((1,)), SP(())) == 1


def test_up_transition_examples():
    assert sg.up_transition(SP((1,)), SP((2,))) == 1
    assert sg.up_transition(SP((2, 1)), SP((3, 1))) == 1
    assert sg.up_transition(SP((2,)), SP((3,))) == F(2, 3)


def test_plancherel_examples():
    assert sg.plancherel(0) == {(): 1}
    assert sg.plancherel(2) == {(2,): 1}
    assert sg.plancherel(3) == {(3,): F(2, 3), (2, 1): F(1, 3)}


def test_coherence():
    for n in range(1, 9):
        upper, lower = sg.plancherel(n), sg.plancherel(n - 1)
        for nu in enumerate_strict(n - 1):
            assert sum(sg.down_transition(lam, nu) * p for lam, p in upper.items()) == lower[nu]


def test_row_sums():
    for lam in strict_up_to(9):
        if lam:
            assert sg.down_row(lam).total() == 1
    for nu in strict_up_to(8):
        assert sg.up_row(nu).total() == 1


def test_consistency_identity():
    for nu in strict_up_to(8):
        for lam in sg.up_row(nu).targets:
            assert sg.up_transition(nu, lam) * path_count(nu) * (sum(nu) + 1) == path_count(lam)


def test_moment_examples():
    for lam in strict_up_to(8):
        assert sg.up_moment(0, lam) == 1
    assert sg.up_moment(1, SP((1,))) == 2
    assert sg.up_moment(1, SP((2, 1))) == 6
    assert sg.down_moment(1, SP((2, 1))) == 6
    assert sg.down_moment(2, SP((1,))) == 0


def test_down_moment_rejects_zero():
    with pytest.raises(ValueError):
        sg.down_moment(0, SP((1,)))


def test_first_moments_are_twice_the_size():
    for lam in strict_up_to(8):
        assert sg.up_moment(1, lam) == 2 * sum(lam)
        if lam:
            assert sg.down_moment(1, lam) == 2 * sum(lam)


def test_petrov_recursion():
    for lam in strict_up_to(8):
        for k in range(1, 6):
            rhs = sg.down_moment(k, lam) + sum(
                (sg.up_moment(i, lam) * sg.down_moment(k - i, lam) for i in range(1, k)), F(0))
            assert sg.up_moment(k, lam) == rhs
