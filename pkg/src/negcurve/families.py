"""The two triangle families and their negative-curve polynomials xi_m.

Family 1 starts from the triangle ``(-1,-1), (m-1,0), (0,m-1)``; family 2
replaces the top vertex by ``((2m-3)/4, (2m-1)/2)``. The enlarged triangles
push the two right vertices outward along the right edge by ``alpha`` and
``beta``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .geometry import (
    QPoint,
    QPolygon,
    lattice_points,
    minkowski_difference,
    minkowski_sum,
    qpoint,
)
from .laurent import (
    LaurentPoly,
    irreducibility_certificate,
    multiplicity_at_unit,
    normalize_at,
    normalize_integer,
    taylor_matrix,
)
from .linalg import QQ, FieldSpec, kernel_basis


class KernelDimensionError(ArithmeticError):
    """The xi_m constraint system did not have a one-dimensional kernel."""


@dataclass(frozen=True)
class FamilyParams:
    family: int
    m: int
    alpha: Fraction = Fraction(0)
    beta: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        if self.family not in (1, 2):
            raise ValueError(f"family must be 1 or 2, got {self.family}")
        if not isinstance(self.m, int) or self.m < 1:
            raise ValueError(f"m must be a positive integer, got {self.m!r}")
        if self.alpha < 0 or self.beta < 0:
            raise ValueError("alpha and beta must be nonnegative")

    @property
    def i(self) -> int:
        return self.family

    @property
    def d0_mult(self) -> int:
        """Multiplicity ``i*m + 1`` of the class D0 at the blown-up point."""
        return self.family * self.m + 1

    def with_ab(self, alpha, beta) -> "FamilyParams":
        return FamilyParams(self.family, self.m, alpha, beta)


def _check(family: int, m: int):
    FamilyParams(family, m)


def top_vertex0(family: int, m: int) -> QPoint:
    if family == 1:
        return qpoint(0, m - 1)
    return qpoint(Fraction(2 * m - 3, 4), Fraction(2 * m - 1, 2))


def delta0(family: int, m: int) -> QPolygon:
    _check(family, m)
    pts = [qpoint(-1, -1), qpoint(m - 1, 0), top_vertex0(family, m)]
    if family == 1 and m == 1:
        return QPolygon((pts[0], pts[1]))
    return QPolygon(tuple(pts))


def delta(params: FamilyParams) -> QPolygon:
    m, a, b = params.m, params.alpha, params.beta
    slope = 1 if params.family == 1 else 2
    right = qpoint(m - 1 + a, -slope * a)
    t0 = top_vertex0(params.family, m)
    top = qpoint(t0.x - b, t0.y + slope * b)
    if right == top:
        return QPolygon((qpoint(-1, -1), right))
    return QPolygon((qpoint(-1, -1), right, top))


def pinned_vertices(params: FamilyParams) -> tuple[QPoint, QPoint]:
    """The lattice vertices ``(m, 1)`` and ``(0, i*m + 1)`` of Delta'."""
    return qpoint(params.m, 1), qpoint(0, params.d0_mult)


def _meet(p, d, q, e) -> QPoint:
    """Intersection of the lines ``p + t d`` and ``q + s e``."""
    det = d[0] * (-e[1]) - d[1] * (-e[0])
    if det == 0:
        raise ValueError("parallel lines")
    rx, ry = q[0] - p[0], q[1] - p[1]
    t = (rx * (-e[1]) - ry * (-e[0])) / det
    return qpoint(p[0] + t * d[0], p[1] + t * d[1])


def delta_prime(params: FamilyParams) -> QPolygon:
    """Triangle with edges parallel to Delta, pinned at ``(m,1)`` and ``(0, im+1)``.

    The third vertex is where the bottom-edge direction through ``(m, 1)``
    meets the left-edge direction through the top vertex.
    """
    D = delta(params)
    if D.is_degenerate:
        raise ValueError("Delta is degenerate; Delta' is undefined")
    v0, v1, v2 = D.vertices
    R, T = pinned_vertices(params)
    L = _meet(R, (v1.x - v0.x, v1.y - v0.y), T, (v2.x - v0.x, v2.y - v0.y))
    return QPolygon((L, R, T))


def delta_shifted(params: FamilyParams) -> QPolygon:
    """Delta translated by ``(1, 1)``: the Newton-polygon region of ``x*y*xi_m``."""
    return delta(params).translate((1, 1))


def delta_double_prime(params: FamilyParams) -> QPolygon:
    """Delta'' with ``(Delta + (1,1)) + Delta'' = Delta'`` and right edge on a line through 0."""
    Dp = delta_prime(params)
    Ds = delta_shifted(params)
    dd = minkowski_difference(Dp, Ds)
    if dd is None:
        raise ValueError(f"Delta' does not contain a translate of Delta for {params}")
    if not minkowski_sum(Ds, dd).same_set(Dp):
        raise AssertionError("Delta'' does not recompose Delta'")
    # The right edge of Delta'' is parallel to (1, -1) or (1, -2).
    d = (1, -1) if params.family == 1 else (1, -2)
    n = (-d[1], d[0])
    supp = max(n[0] * v.x + n[1] * v.y for v in dd.vertices)
    if supp != 0:
        raise AssertionError("right edge of Delta'' misses the origin")
    return dd


def lattice_count_expected(m: int) -> int:
    return math.comb(m + 1, 2) + 1


# -- xi_m ----------------------------------------------------------------------


def xi_system(family: int, m: int, field: FieldSpec = QQ):
    pts = lattice_points(delta0(family, m))
    return pts, taylor_matrix(pts, m, field)


def xi_solve(family: int, m: int, field: FieldSpec = QQ) -> LaurentPoly:
    """The unique (up to scalar) polynomial in Delta0 vanishing to order m at t0.

    Over Q it is normalized to coprime integers with positive coefficient at
    ``(-1, -1)``; over F_p it is scaled to be monic at ``(-1, -1)``.
    """
    pts, M = xi_system(family, m, field)
    K = kernel_basis(M)
    if len(K) != 1:
        raise KernelDimensionError(
            f"family {family}, m={m}, field {field}: kernel dimension {len(K)}"
        )
    f = LaurentPoly.from_vector(pts, K[0], field)
    if field.is_rational:
        return normalize_integer(f)
    return normalize_at(f, (-1, -1))


def xi_recurrence(family: int, m: int, variant: str = "b") -> LaurentPoly:
    """xi_m over Q from the explicit recurrences, normalized like :func:`xi_solve`.

    Family 1: ``variant="b"`` uses ``xi_{k+1} = (x-1) xi_k + y^-1 (y-1)^(k+1)``,
    ``variant="c"`` its mirror ``(y-1) xi_k + x^-1 (x-1)^(k+1)``. Family 2 uses
    ``xi_{k+2} = (x-1) xi_{k+1} + x (y-1)^2 xi_k``.
    """
    _check(family, m)
    x, y = LaurentPoly.x(), LaurentPoly.y()
    one = LaurentPoly.constant(1)
    xi1 = one - LaurentPoly.monomial(-1, -1)
    if family == 1:
        cur = xi1
        for k in range(1, m):
            if variant == "b":
                cur = (x - 1) * cur + y ** -1 * (y - 1) ** (k + 1)
            elif variant == "c":
                cur = (y - 1) * cur + x ** -1 * (x - 1) ** (k + 1)
            else:
                raise ValueError(f"unknown recurrence variant {variant!r}")
        return normalize_integer(cur)
    xi2 = LaurentPoly.monomial(-1, -1) - 3 + x + y
    seq = [xi1, xi2]
    while len(seq) < m:
        seq.append((x - 1) * seq[-1] + x * (y - 1) ** 2 * seq[-2])
    return normalize_integer(seq[m - 1])


@dataclass
class XiReport:
    family: int
    m: int
    field: FieldSpec
    poly: LaurentPoly | None
    checks: dict[str, bool] = field(default_factory=dict)
    errors: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors and all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "m": self.m,
            "field": str(self.field),
            "poly": self.poly.to_json() if self.poly is not None else None,
            "checks": dict(sorted(self.checks.items())),
            "errors": self.errors,
            "ok": self.ok,
        }


def verify_xi(family: int, m: int, field: FieldSpec = QQ) -> XiReport:
    """Check support, exact multiplicity, corner coefficients and irreducibility."""
    report = XiReport(family, m, field, None)
    try:
        xi = xi_solve(family, m, field)
    except KernelDimensionError as exc:
        report.errors.append(str(exc))
        return report
    report.poly = xi
    D0 = delta0(family, m)
    checks = report.checks
    checks["support_in_delta0"] = all(D0.contains(p) for p in xi.terms)
    checks["multiplicity_exactly_m"] = multiplicity_at_unit(xi) == m
    checks["corner_(-1,-1)_nonzero"] = not field.is_zero(xi.coefficient((-1, -1)))
    checks[f"corner_({m - 1},0)_nonzero"] = not field.is_zero(xi.coefficient((m - 1, 0)))
    try:
        cert = irreducibility_certificate(xi, D0) if checks["support_in_delta0"] else None
    except ValueError as exc:
        report.errors.append(str(exc))
        cert = None
    checks["irreducible_via_bottom_edge"] = cert is not None and set(cert) == {(-1, -1), (m - 1, 0)}
    return report
