"""The pivoted triangle used to rule out ``m`` in HC in the non-MDS range.

Start from ``m Delta'`` with the bottom edge at the ``alpha = 0`` slope (the
line ``y = x/m`` through the origin) and the left edge at its boundary slope
(``m+1`` in family 1, ``2`` in family 2). Pivoting the left edge about the top
vertex ``T`` first meets the lattice point ``Q`` on the bottom line. Since
``Q`` is not in the support of a section when ``alpha > 0``, the edge can pivot
past ``Q``; the result has width strictly below its height ``m (i m + 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geometry import LatticePoint, QPolygon, lattice_points, qpoint, width_height


def _check(family: int, m: int):
    if family not in (1, 2):
        raise ValueError("family must be 1 or 2")
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"m must be a positive integer, got {m!r}")
    if family == 1 and m == 1:
        raise ValueError("family 1 with m = 1 has no pivot certificate; run hc_exact_test directly")


def prepivot_slope(family: int, m: int) -> Fraction:
    """Left-edge slope of ``m Delta'`` at the boundary ``beta = 1/(m+2)`` (family 1) or ``beta = 0``."""
    _check(family, m)
    return Fraction(m + 1) if family == 1 else Fraction(2)


def pivot_slope(family: int, m: int) -> Fraction:
    """Slope of the line through the top vertex and Q."""
    _check(family, m)
    if family == 1:
        return m + 1 + Fraction(1, m)
    return 2 + Fraction(1, m * (m + 1))


def q_point(family: int, m: int) -> LatticePoint:
    _check(family, m)
    if family == 1:
        return (-m, -1)
    return (-(m * m + m), -(m + 1))


def _top(family: int, m: int) -> LatticePoint:
    return (0, m * (family * m + 1))


def _right(m: int) -> LatticePoint:
    return (m * m, m)


def _left_vertex(top: LatticePoint, slope: Fraction, m: int):
    """Meet of ``y = top.y + slope x`` with the bottom line ``y = x/m``."""
    x = Fraction(top[1]) / (Fraction(1, m) - slope)
    return qpoint(x, x / m)


def prepivot_triangle(family: int, m: int) -> QPolygon:
    _check(family, m)
    T = _top(family, m)
    L = _left_vertex(T, prepivot_slope(family, m), m)
    return QPolygon((L, qpoint(*_right(m)), qpoint(*T)))


def prepivot_edge_points(family: int, m: int) -> list[LatticePoint]:
    """Lattice points on the left edge of the pre-pivot triangle, top vertex first.

    Points on the bottom line are left out: they drop out of ``m Delta'`` as
    soon as ``alpha > 0``. This only matters for family 2 with m = 1, whose
    left vertex ``(-3, -3)`` is a lattice point.
    """
    P = prepivot_triangle(family, m)
    T = _top(family, m)
    s = prepivot_slope(family, m)
    pts = [p for p in lattice_points(P) if p[1] - T[1] == s * p[0] and m * p[1] != p[0]]
    return sorted(pts, key=lambda p: -p[1])


def _ratio(top: LatticePoint, pt: LatticePoint) -> Fraction:
    return Fraction(top[1] - pt[1], -pt[0])


def first_hit_points(family: int, m: int) -> list[LatticePoint]:
    """Lattice points of the pre-pivot triangle met first when the left edge pivots.

    Pivoting about ``T`` steepens the edge; a point ``(x, y)`` with ``x < 0``
    leaves the triangle once the slope exceeds ``(T.y - y) / -x``. Among
    points off the pre-pivot edge, the first met are those minimizing it.
    """
    T = _top(family, m)
    s = prepivot_slope(family, m)
    cands = [p for p in lattice_points(prepivot_triangle(family, m)) if p[0] < 0 and _ratio(T, p) > s]
    if not cands:
        return []
    best = min(_ratio(T, p) for p in cands)
    return sorted(p for p in cands if _ratio(T, p) == best)


@dataclass(frozen=True)
class TildeData:
    family: int
    m: int
    triangle: QPolygon
    pivot_slope: Fraction
    tilde_slope: Fraction
    q_point: LatticePoint
    slope_exact: QPolygon
    admissible: tuple[LatticePoint, ...]
    excluded_points: frozenset

    @property
    def top_vertex(self) -> LatticePoint:
        return _top(self.family, self.m)


def tilde_triangle(family: int, m: int) -> TildeData:
    """Pivot the left edge past Q, keeping every admissible lattice point.

    The admissible support is the set of lattice points of the triangle at
    slope exactly ``pivot_slope``, without Q and without the points inside
    its left edge. The left edge of the result passes through the top vertex
    and the admissible point that minimizes the slope, which therefore
    exceeds ``pivot_slope``.
    """
    _check(family, m)
    T, R, Q = _top(family, m), _right(m), q_point(family, m)
    ps = pivot_slope(family, m)
    exact = QPolygon((qpoint(*Q), qpoint(*R), qpoint(*T)))
    if exact.vertices[0] != _left_vertex(T, ps, m):
        raise AssertionError("Q is not the left vertex of the slope-exact triangle")
    pts = lattice_points(exact)
    excluded = {p for p in pts if p != T and p[0] < 0 and _ratio(T, p) == ps}
    admissible = tuple(p for p in pts if p not in excluded)
    left = [p for p in admissible if p[0] < 0]
    if left:
        slope = min(_ratio(T, p) for p in left)
        L = _left_vertex(T, slope, m)
    else:
        slope = None
        L = qpoint(0, 0)
    tri = QPolygon((L, qpoint(*R), qpoint(*T)))
    if not all(tri.contains(p) for p in admissible):
        raise AssertionError("pivoted triangle lost an admissible point")
    return TildeData(
        family, m, tri, ps, slope, Q, exact, admissible, frozenset(excluded)
    )


@dataclass(frozen=True)
class TildeCertificate:
    family: int
    m: int
    width: Fraction
    height: Fraction
    intersection: Fraction  # C~ . D~ = w - m (i m + 1)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "m": self.m,
            "width": str(self.width),
            "height": str(self.height),
            "c_tilde_dot_d_tilde": str(self.intersection),
        }


def tilde_negativity_certificate(family: int, m: int) -> TildeCertificate:
    """``(w, h)`` of the pivoted triangle with ``h = m (i m + 1)`` and ``w < h``."""
    data = tilde_triangle(family, m)
    w, h = width_height(data.triangle, data.top_vertex)
    target = m * (family * m + 1)
    if h != target:
        raise AssertionError(f"height {h} differs from m(im+1) = {target}")
    if not w < h:
        raise AssertionError(f"width {w} is not below height {h}")
    dot = w * h / h - target
    if not dot < 0:
        raise AssertionError("C~ . D~ is not negative")
    return TildeCertificate(family, m, w, h, dot)
