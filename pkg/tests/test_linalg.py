import itertools
import random
from fractions import Fraction

import pytest

from negcurve.linalg import (
    BACKEND,
    GF,
    QQ,
    ExactMatrix,
    FieldSpec,
    kernel_basis,
    kernel_coordinate_nonzero,
    nullity,
    rank,
)


def brute_kernel(rows, ncols, p):
    return [
        v
        for v in itertools.product(range(p), repeat=ncols)
        if all(sum(a * b for a, b in zip(r, v)) % p == 0 for r in rows)
    ]


def test_field_parse_and_errors():
    assert FieldSpec.parse("q") == QQ
    assert FieldSpec.parse("fp:7") == GF(7)
    assert str(GF(7)) == "fp:7"
    for bad in ("fp:8", "fp:1", "r", "fp:x", "fp:" + str(2**31 + 11)):
        with pytest.raises(ValueError):
            FieldSpec.parse(bad)
    with pytest.raises(ZeroDivisionError):
        GF(7)(Fraction(1, 14))
    assert GF(7)(Fraction(1, 3)) == 5


def test_rank_identity_zero_and_empty():
    assert rank(ExactMatrix.identity(4)) == 4
    assert nullity(ExactMatrix.zeros(3, 5)) == 5
    assert nullity(ExactMatrix(QQ, [], 3)) == 3
    assert kernel_basis(ExactMatrix(QQ, [], 0)) == []


def test_rational_kernel_exact():
    M = ExactMatrix(QQ, [[1, 2, 3], [2, 4, 6], [1, 0, -1]])
    K = kernel_basis(M)
    assert len(K) == 1
    assert all(x == 0 for x in M.apply(K[0]))
    assert K[0] == [Fraction(1), Fraction(-2), Fraction(1)]


def test_rational_entries():
    M = ExactMatrix(QQ, [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 1]])
    assert rank(M) == 1


def test_modp_kernel_matches_brute_force(modp_backend):
    rng = random.Random(5)
    p = 5
    for _ in range(40):
        nr, nc = rng.randint(1, 4), rng.randint(1, 4)
        rows = [[rng.randrange(p) for _ in range(nc)] for _ in range(nr)]
        M = ExactMatrix(GF(p), rows, nc)
        brute = brute_kernel(rows, nc, p)
        assert p ** nullity(M) == len(brute)
        for v in kernel_basis(M):
            assert tuple(v) in set(brute)
        for idx in range(nc):
            assert kernel_coordinate_nonzero(M, idx) == any(v[idx] for v in brute)


def test_rank_mod_p_at_most_rank_over_q(modp_backend):
    rng = random.Random(11)
    for _ in range(60):
        nr, nc = rng.randint(1, 7), rng.randint(1, 7)
        rows = [[rng.randint(-9, 9) for _ in range(nc)] for _ in range(nr)]
        r_q = rank(ExactMatrix(QQ, rows, nc))
        for p in (2, 3, 1009):
            assert rank(ExactMatrix(GF(p), rows, nc)) <= r_q


def test_backends_agree_on_large_matrix(monkeypatch):
    from negcurve import linalg

    rng = random.Random(2)
    rows = [[rng.randrange(1009) for _ in range(40)] for _ in range(30)]
    M = ExactMatrix(GF(1009), rows, 40)
    a = kernel_basis(M)
    monkeypatch.setattr(linalg, "_rref_modp_compiled", None)
    assert kernel_basis(M) == a


def test_kernel_coordinate_out_of_range():
    with pytest.raises(IndexError):
        kernel_coordinate_nonzero(ExactMatrix.zeros(1, 2), 2)


def test_reduce_mod():
    M = ExactMatrix(QQ, [[3, 6], [1, Fraction(1, 2)]])
    assert M.reduce_mod(3).rows == [[0, 0], [1, 2]]


def test_backend_reported():
    assert BACKEND in ("cython", "python")
