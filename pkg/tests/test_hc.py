import random
from fractions import Fraction

import pytest

from negcurve.families import FamilyParams, delta0, delta_prime
from negcurve.hc import (
    WITNESS_ALPHA0,
    WITNESS_COMBINATION,
    WITNESS_Y_XI,
    charp_witness_search,
    cross_char_check,
    default_primes,
    hc_exact_test,
    hc_vertex_test,
    mds_classify,
    mds_witness_verify,
    not_mds_predicate,
    scan_grid,
    section_space,
    semigroup_audit,
)
from negcurve.intersection import negativity_threshold
from negcurve.laurent import LaurentPoly
from negcurve.linalg import GF, QQ
from negcurve.wps import example_parameters

F = Fraction
EX12 = FamilyParams(1, 2, F(1, 16), F(13, 49))


def test_section_space_examples():
    S = section_space(delta0(1, 2), 2)
    assert S.dim == 1
    assert S.basis()[0].is_proportional(LaurentPoly({(-1, -1): 1, (0, 0): -3, (1, 0): 1, (0, 1): 1}))
    P = delta_prime(FamilyParams(1, 2, 0, F(1, 5)))
    assert section_space(P, 0).dim == len(section_space(P, 0).points)
    S3 = section_space(P, 3)
    assert S3.dim >= 1
    cube = (LaurentPoly.constant(1) - LaurentPoly.y()) ** 3
    assert all(pt in S3.point_index for pt in cube.terms)
    assert section_space(None, 2).dim == 0


def test_vertex_examples():
    assert hc_vertex_test(1, FamilyParams(1, 2, 0, F(1, 5))).member
    assert not hc_vertex_test(1, EX12).member
    for m in (1, 2, 3):
        assert hc_vertex_test(1, FamilyParams(2, m, 0, F(1, 100))).member


def test_vertex_inapplicable_when_beta_zero_family_one():
    v = hc_vertex_test(1, FamilyParams(1, 2, F(1, 10), 0))
    assert not v.member and v.note.startswith("inapplicable")


def test_exact_examples():
    assert hc_exact_test(1, FamilyParams(1, 2, F(1, 20), F(1, 20))).member
    assert [hc_exact_test(l, EX12).member for l in (1, 2)] == [False, False]


def test_preconditions():
    with pytest.raises(ValueError):
        hc_exact_test(1, FamilyParams(2, 1, F(1, 24), F(1, 24)))
    with pytest.raises(ValueError):
        hc_vertex_test(0, FamilyParams(1, 2, 0, F(1, 5)))


def test_classify_examples():
    assert mds_classify(FamilyParams(1, 2, 0, F(1, 5))).variant == "MDS"
    assert mds_classify(EX12).variant == "NotMDS"
    assert mds_classify(FamilyParams(2, 1, F(1, 100), F(1, 100))).variant == "NotMDS"
    assert mds_classify(FamilyParams(2, 1, F(1, 24), F(1, 24))).variant == "NoInfo"
    assert mds_classify(FamilyParams(2, 1, F(1, 10), F(1, 10))).variant == "OutOfScope"
    with pytest.raises(ValueError):
        mds_classify(FamilyParams(1, 1, 0, 0))


def test_witness_examples():
    assert mds_witness_verify(FamilyParams(1, 2, 0, F(1, 5))).tag == WITNESS_ALPHA0
    # alpha = beta = 1/5 makes C^2 positive for m = 3, so use a point of the same cell.
    assert mds_witness_verify(FamilyParams(1, 3, F(1, 10), F(1, 10))).tag == WITNESS_Y_XI
    assert mds_witness_verify(FamilyParams(2, 2, F(1, 100), 0)).tag == WITNESS_COMBINATION
    with pytest.raises(ValueError):
        mds_witness_verify(EX12)


def mds_cases(family, m):
    t = negativity_threshold(family, m)
    cases = [FamilyParams(family, m, 0, t / 2), FamilyParams(family, m, t / 2, 0)]
    if family == 1:
        s = min(t / 4, F(1, m + 2))
        cases.append(FamilyParams(1, m, s, s))
    return cases


@pytest.mark.parametrize("family", [1, 2])
@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_mds_cells_are_members(family, m):
    for p in mds_cases(family, m):
        assert mds_classify(p).variant == "MDS"
        mds_witness_verify(p)
        assert hc_exact_test(1, p).member


@pytest.mark.parametrize("family", [1, 2])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_not_mds_examples_have_no_small_members(family, m):
    p = example_parameters(family, m)
    assert mds_classify(p).variant == "NotMDS"
    for l in range(1, min(m, 3) + 1):
        assert not hc_exact_test(l, p).member


def random_negative(rng):
    family = rng.choice((1, 2))
    m = rng.randint(1, 3)
    t = negativity_threshold(family, m)
    while True:
        a = F(rng.randint(0, 12), rng.randint(1, 12)) * t
        b = F(rng.randint(0, 12), rng.randint(1, 12)) * t
        if a + b < t and (family == 2 or m > 1 or a + b > 0):
            return FamilyParams(family, m, a, b)


def test_vertex_implies_exact_random():
    rng = random.Random(7)
    for _ in range(20):
        p = random_negative(rng)
        for l in (1, 2):
            e, v = hc_exact_test(l, p), hc_vertex_test(l, p)
            assert e.dims[1] <= e.dims[0]
            assert not v.member or e.member


def test_translation_invariance():
    rng = random.Random(3)
    for _ in range(8):
        p = random_negative(rng)
        off = (rng.randint(-3, 3), rng.randint(-3, 3))
        assert hc_exact_test(1, p) == hc_exact_test(1, p, offset=off)
        assert hc_vertex_test(1, p).member == hc_vertex_test(1, p, offset=off).member


def test_cross_char():
    r = cross_char_check(1, FamilyParams(1, 2, 0, F(1, 5)), [1009, 2003, 4001])
    assert r.rational.member and r.agree and sorted(r.by_prime) == [1009, 2003, 4001]
    r = cross_char_check(1, EX12, [7, 1009])
    assert 7 in r.skipped and list(r.by_prime) == [1009]


def test_default_primes_env(monkeypatch):
    monkeypatch.delenv("NEGCURVE_PRIMES", raising=False)
    assert default_primes() == (1009, 2003, 4001)
    monkeypatch.setenv("NEGCURVE_PRIMES", "5,7")
    assert default_primes() == (5, 7)
    monkeypatch.setenv("NEGCURVE_PRIMES", "8")
    with pytest.raises(ValueError):
        default_primes()


def test_charp_alpha_zero():
    out = charp_witness_search(FamilyParams(2, 2, 0, F(1, 100)), 3, 2)
    assert out.l == 0 and out.status == "found"


def test_charp_reverified():
    for family, m, p in [(2, 1, 2), (1, 2, 3), (2, 2, 3)]:
        params = example_parameters(family, m)
        out = charp_witness_search(params, p, 2)
        if out.l is not None:
            assert hc_exact_test(out.degree, params, GF(p)).member
            assert out.witness.field == GF(p)


def test_semigroup_audit():
    a = semigroup_audit(FamilyParams(1, 2, 0, F(1, 5)), QQ, 4)
    assert a.ok and a.members == [1, 2, 3, 4]
    b = semigroup_audit(EX12, QQ, 3)
    assert b.ok and b.members == []


def test_scan_family_two():
    nodes = scan_grid(2, 1, F(1, 60))
    for nd in nodes:
        if nd.alpha + nd.beta == F(1, 12):
            assert nd.verdict.variant == "NoInfo"
        elif nd.alpha > 0 and nd.beta > 0:
            assert nd.verdict.variant == "NotMDS"
        else:
            assert nd.verdict.variant == "MDS"
    assert nodes == sorted(nodes, key=lambda n: (n.alpha, n.beta))


def test_predicate_family_one():
    assert not_mds_predicate(FamilyParams(1, 2, F(3, 10), F(1, 100)))
    assert not not_mds_predicate(FamilyParams(1, 2, F(1, 4), F(1, 4)))
