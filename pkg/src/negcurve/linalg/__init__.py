"""Exact dense linear algebra over Q and F_p.

Over Q the elimination is fraction-free on integer rows. Over F_p the
elimination runs in the compiled kernel ``_modp_core`` when it is built and
importable, else in the pure Python kernel; set ``NEGCURVE_PURE_PYTHON=1`` to
force the fallback. ``BACKEND`` names the kernel in use.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from dataclasses import field as dc_field
from fractions import Fraction

from . import _modp_py, _qq
from .fields import GF, QQ, FieldSpec, is_prime

_rref_modp_compiled = None
if not os.environ.get("NEGCURVE_PURE_PYTHON"):
    try:
        from ._modp_core import rref_modp as _rref_modp_compiled
    except ImportError:  # extension not built
        _rref_modp_compiled = None

BACKEND = "cython" if _rref_modp_compiled is not None else "python"

__all__ = [
    "BACKEND",
    "ExactMatrix",
    "FieldSpec",
    "GF",
    "QQ",
    "is_prime",
    "kernel_basis",
    "kernel_coordinate_nonzero",
    "nullity",
    "rank",
    "rref",
]


@dataclass
class ExactMatrix:
    """Dense matrix whose entries all lie in ``field``."""

    field: FieldSpec
    rows: list[list] = dc_field(default_factory=list)
    ncols: int = 0

    def __post_init__(self):
        if self.rows and not self.ncols:
            self.ncols = len(self.rows[0])
        if self.ncols < 0:
            raise ValueError("negative dimension")
        for row in self.rows:
            if len(row) != self.ncols:
                raise ValueError("ragged matrix")
        f = self.field
        self.rows = [[f(x) for x in row] for row in self.rows]

    @classmethod
    def zeros(cls, nrows: int, ncols: int, field: FieldSpec = QQ) -> "ExactMatrix":
        return cls(field, [[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int, field: FieldSpec = QQ) -> "ExactMatrix":
        return cls(field, [[int(i == j) for j in range(n)] for i in range(n)], n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def with_row(self, row) -> "ExactMatrix":
        return ExactMatrix(self.field, [list(r) for r in self.rows] + [list(row)], self.ncols)

    def apply(self, vec) -> list:
        """Return ``M @ vec``."""
        f = self.field
        out = []
        for row in self.rows:
            s = f.zero
            for a, b in zip(row, vec):
                if a and b:
                    s = f.add(s, f.mul(a, b))
            out.append(s)
        return out

    def reduce_mod(self, p: int) -> "ExactMatrix":
        """Entrywise reduction of a rational matrix modulo ``p``."""
        if not self.field.is_rational:
            raise ValueError("only rational matrices can be reduced")
        return ExactMatrix(GF(p), self.rows, self.ncols)


def rref(M: ExactMatrix):
    """Return ``(rows, pivots)``: a reduced echelon form and its pivot columns.

    Over F_p the pivot rows are normalized to leading 1. Over Q the rows are
    integers scaled so that every pivot has the same value.
    """
    f = M.field
    if f.is_rational:
        rows = _qq.integer_rows(M.rows)
        pivots = _qq.rref_integer(rows, M.ncols)
        return rows, pivots
    if _rref_modp_compiled is not None and M.nrows and M.ncols:
        import numpy as np

        a = np.array(M.rows, dtype=np.int64).reshape(M.nrows, M.ncols)
        pivots = _rref_modp_compiled(a, f.p)
        return a.tolist(), list(pivots)
    rows = [list(r) for r in M.rows]
    pivots = _modp_py.rref_modp(rows, M.ncols, f.p)
    return rows, pivots


def rank(M: ExactMatrix) -> int:
    if M.field.is_rational:
        return _qq.rank_integer(_qq.integer_rows(M.rows), M.ncols)
    return len(rref(M)[1])


def nullity(M: ExactMatrix) -> int:
    return M.ncols - rank(M)


def kernel_basis(M: ExactMatrix) -> list[list]:
    """Canonical basis of the right null space.

    One vector per non-pivot column ``c``: it has a 1 in position ``c``, zeros
    in the other free positions, and the values forced at the pivot positions.
    This is the basis read off the reduced row echelon form, so it depends only
    on the row space of ``M``.
    """
    f = M.field
    rows, pivots = rref(M)
    pivset = set(pivots)
    free = [c for c in range(M.ncols) if c not in pivset]
    basis = []
    for c in free:
        v = [f.zero] * M.ncols
        v[c] = f.one
        for i, pc in enumerate(pivots):
            a = rows[i][c]
            if a:
                if f.is_rational:
                    v[pc] = Fraction(-a, rows[i][pc])
                else:
                    v[pc] = (-a) % f.p
        basis.append(v)
    return basis


def kernel_coordinate_nonzero(M: ExactMatrix, idx: int) -> bool:
    """True iff some kernel vector of ``M`` is nonzero at coordinate ``idx``."""
    if not 0 <= idx < M.ncols:
        raise IndexError(f"column {idx} out of range for {M.ncols} columns")
    unit = [0] * M.ncols
    unit[idx] = 1
    return nullity(M) > nullity(M.with_row(unit))
