from fractions import Fraction

import pytest

from negcurve.families import (
    FamilyParams,
    delta,
    delta0,
    delta_double_prime,
    delta_prime,
    delta_shifted,
    lattice_count_expected,
    verify_xi,
    xi_recurrence,
    xi_solve,
)
from negcurve.geometry import lattice_points, minkowski_sum, qpoint
from negcurve.laurent import reduce_mod_p
from negcurve.linalg import GF


def test_params_validation():
    for bad in [(3, 1, 0, 0), (1, 0, 0, 0), (1, 2, -1, 0), (1, 2.0, 0, 0)]:
        with pytest.raises(ValueError):
            FamilyParams(*bad)


def test_vertices():
    assert delta0(1, 1).is_degenerate
    assert set(delta0(2, 2).vertices) == {qpoint(-1, -1), qpoint(1, 0), qpoint(Fraction(1, 4), Fraction(3, 2))}
    D = delta(FamilyParams(1, 2, 0, Fraction(1, 5)))
    assert D.vertices == (qpoint(-1, -1), qpoint(1, 0), qpoint(Fraction(-1, 5), Fraction(6, 5)))


def test_xi_examples():
    assert xi_solve(1, 2).terms == {(-1, -1): 1, (0, 0): -3, (1, 0): 1, (0, 1): 1}
    assert xi_solve(2, 2).terms == {(-1, -1): 1, (0, 0): -3, (1, 0): 1, (0, 1): 1}
    assert xi_solve(1, 1).terms == {(-1, -1): 1, (0, 0): -1}


@pytest.mark.parametrize("family", [1, 2])
@pytest.mark.parametrize("m", range(1, 7))
def test_solve_matches_recurrence(family, m):
    assert xi_solve(family, m).is_proportional(xi_recurrence(family, m))
    if family == 1:
        assert xi_solve(1, m).is_proportional(xi_recurrence(1, m, "c"))


@pytest.mark.parametrize("m", range(1, 6))
def test_reduction_commutes(m):
    for family in (1, 2):
        for p in (3, 1009):
            assert reduce_mod_p(xi_solve(family, m), p).is_proportional(xi_solve(family, m, GF(p)))


def test_recurrence_variant_error():
    with pytest.raises(ValueError):
        xi_recurrence(1, 3, "z")


def test_verify_xi_report():
    r = verify_xi(2, 3, GF(7))
    assert r.ok and r.to_json()["ok"]


@pytest.mark.parametrize(
    "params",
    [
        FamilyParams(1, 2, 0, Fraction(1, 5)),
        FamilyParams(1, 2, Fraction(1, 16), Fraction(13, 49)),
        FamilyParams(1, 4, Fraction(1, 30), Fraction(1, 7)),
        FamilyParams(2, 1, Fraction(1, 100), Fraction(1, 100)),
        FamilyParams(2, 3, Fraction(1, 37), 0),
    ],
)
def test_double_prime_recomposes(params):
    Dp, Dd = delta_prime(params), delta_double_prime(params)
    assert minkowski_sum(delta_shifted(params), Dd).same_set(Dp)
    R, T = Dp.vertices[1], Dp.vertices[2]
    assert R == qpoint(params.m, 1) and T == qpoint(0, params.d0_mult)


def test_delta_prime_example():
    P = delta_prime(FamilyParams(1, 2, 0, Fraction(1, 5)))
    assert P.vertices == (qpoint(Fraction(-4, 3), Fraction(-2, 3)), qpoint(2, 1), qpoint(0, 3))


def test_lattice_counts():
    for m in range(1, 11):
        for family in (1, 2):
            assert len(lattice_points(delta0(family, m))) == lattice_count_expected(m)
