import random
from fractions import Fraction

import pytest

from negcurve.families import FamilyParams
from negcurve.intersection import (
    AmbientModel,
    BlowupClass,
    Negativity,
    c_self_intersection,
    class_of_C,
    class_of_D0,
    lambda_factor,
    negativity_status,
    negativity_threshold,
    pair,
)


def random_params(rng, family):
    m = rng.randint(1, 5)
    while True:
        a = Fraction(rng.randint(0, 40), rng.randint(1, 60))
        b = Fraction(rng.randint(0, 40), rng.randint(1, 60))
        if family == 2 or m > 1 or a + b > 0:
            return FamilyParams(family, m, a, b)


@pytest.mark.parametrize("family", [1, 2])
def test_identities_random(family):
    rng = random.Random(family)
    for _ in range(50):
        p = random_params(rng, family)
        amb = AmbientModel.for_params(p)
        C, D0 = class_of_C(p), class_of_D0(p)
        assert pair(C, D0, amb) == 0
        s = p.alpha + p.beta
        closed = (p.m + 1) * s - 1 if family == 1 else (2 * p.m + 1) * s - Fraction(1, 4)
        assert c_self_intersection(p) == closed == pair(C, C, amb)


def test_negativity_threshold():
    for family in (1, 2):
        for m in range(1, 5):
            t = negativity_threshold(family, m)
            assert negativity_status(FamilyParams(family, m, t / 2, t / 2)) is Negativity.ZERO
            assert negativity_status(FamilyParams(family, m, t, t / 3)) is Negativity.POSITIVE
            assert negativity_status(FamilyParams(family, m, t / 3, t / 3)) is Negativity.NEGATIVE


def test_degenerate_lambda():
    with pytest.raises(ZeroDivisionError):
        lambda_factor(FamilyParams(1, 1, 0, 0))


def test_pair_ambient_mismatch():
    a = AmbientModel.for_params(FamilyParams(1, 2, 0, 0))
    b = AmbientModel.for_params(FamilyParams(1, 3, 0, 0))
    with pytest.raises(ValueError):
        pair(BlowupClass(1, 1, a), BlowupClass(1, 1), b)
