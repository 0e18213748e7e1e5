"""Exact geometry of convex polygons with rational vertices.

Polygons are stored as counterclockwise vertex tuples of ``Fraction`` pairs.
Segments and single points are valid (degenerate) polygons and flow through
every operation that does not need a 2-dimensional interior.

Lattice points are always reported sorted by ``(j, i)``; this order fixes the
column order of every constraint matrix built on top of them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence


class QPoint(NamedTuple):
    x: Fraction
    y: Fraction


LatticePoint = tuple[int, int]


def qpoint(x, y) -> QPoint:
    return QPoint(Fraction(x), Fraction(y))


def _cross(o, a, b) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lattice_order(pt) -> tuple:
    return (pt[1], pt[0])


def convex_hull(points: Iterable) -> tuple[QPoint, ...]:
    """Counterclockwise hull without collinear points (monotone chain)."""
    pts = sorted({qpoint(*p) for p in points})
    if len(pts) <= 2:
        return tuple(pts)
    lower: list[QPoint] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[QPoint] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 1 or (len(hull) == 2 and hull[0] == hull[1]):
        return (hull[0],)
    return tuple(hull)


@dataclass(frozen=True)
class QPolygon:
    """Convex polygon, vertices in counterclockwise order."""

    vertices: tuple[QPoint, ...]

    def __post_init__(self):
        vs = tuple(qpoint(*v) for v in self.vertices)
        object.__setattr__(self, "vertices", vs)
        n = len(vs)
        if n == 0:
            raise ValueError("empty polygon")
        for k in range(n):
            if n > 1 and vs[k] == vs[(k + 1) % n]:
                raise ValueError("duplicate consecutive vertices")
        if n <= 2:
            return
        for k in range(n):
            if _cross(vs[k], vs[(k + 1) % n], vs[(k + 2) % n]) < 0:
                raise ValueError("vertices are not convex counterclockwise")
        if all(_cross(vs[0], vs[k], vs[k + 1]) == 0 for k in range(1, n - 1)):
            raise ValueError("collinear vertex list; pass the two endpoints")

    @classmethod
    def hull(cls, points: Iterable) -> "QPolygon":
        return cls(convex_hull(points))

    @property
    def dim(self) -> int:
        return min(len(self.vertices) - 1, 2)

    @property
    def is_degenerate(self) -> bool:
        return len(self.vertices) < 3

    def is_triangle(self) -> bool:
        return len(self.vertices) == 3

    def edges(self) -> list[tuple[QPoint, QPoint]]:
        vs = self.vertices
        if len(vs) == 1:
            return []
        if len(vs) == 2:
            return [(vs[0], vs[1])]
        return [(vs[k], vs[(k + 1) % len(vs)]) for k in range(len(vs))]

    def halfplanes(self) -> list[tuple[tuple[Fraction, Fraction], Fraction]]:
        """Constraints ``(n, c)`` meaning ``n . x >= c`` whose intersection is the polygon."""
        vs = self.vertices
        if len(vs) == 1:
            x, y = vs[0]
            one, zero = Fraction(1), Fraction(0)
            return [((one, zero), x), ((-one, zero), -x), ((zero, one), y), ((zero, -one), -y)]
        if len(vs) == 2:
            a, b = vs
            d = (b.x - a.x, b.y - a.y)
            n = (-d[1], d[0])
            return [
                (n, n[0] * a.x + n[1] * a.y),
                ((-n[0], -n[1]), -(n[0] * a.x + n[1] * a.y)),
                (d, d[0] * a.x + d[1] * a.y),
                ((-d[0], -d[1]), -(d[0] * b.x + d[1] * b.y)),
            ]
        out = []
        for a, b in self.edges():
            n = (a.y - b.y, b.x - a.x)
            out.append((n, n[0] * a.x + n[1] * a.y))
        return out

    def contains(self, pt) -> bool:
        x, y = pt
        return all(n[0] * x + n[1] * y >= c for n, c in self.halfplanes())

    def bounding_box(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return min(xs), max(xs), min(ys), max(ys)

    def translate(self, v) -> "QPolygon":
        dx, dy = Fraction(v[0]), Fraction(v[1])
        return QPolygon(tuple(QPoint(p.x + dx, p.y + dy) for p in self.vertices))

    def scale(self, k) -> "QPolygon":
        """Dilate about the origin by a positive factor."""
        k = Fraction(k)
        if k <= 0:
            raise ValueError("scale factor must be positive")
        return QPolygon(tuple(QPoint(k * p.x, k * p.y) for p in self.vertices))

    def swap_xy(self) -> "QPolygon":
        return QPolygon.hull((p.y, p.x) for p in self.vertices)

    def same_set(self, other: "QPolygon") -> bool:
        return set(self.vertices) == set(other.vertices)

    def contains_polygon(self, other: "QPolygon") -> bool:
        return all(self.contains(v) for v in other.vertices)

    def vertex(self, pt) -> int:
        """Index of ``pt`` among the vertices; ValueError if it is not one."""
        return self.vertices.index(qpoint(*pt))

    def __str__(self):
        return "[" + ", ".join(f"({p.x}, {p.y})" for p in self.vertices) + "]"


def area(P: QPolygon) -> Fraction:
    """Shoelace area; zero for segments and points."""
    vs = P.vertices
    if len(vs) < 3:
        return Fraction(0)
    s = Fraction(0)
    for k in range(len(vs)):
        a, b = vs[k], vs[(k + 1) % len(vs)]
        s += a.x * b.y - a.y * b.x
    return abs(s) / 2


def lattice_points(P: QPolygon) -> list[LatticePoint]:
    """All integer points of the closed polygon, sorted by ``(j, i)``."""
    x0, x1, y0, y1 = P.bounding_box()
    hp = P.halfplanes()
    pts = []
    for j in range(math.floor(y0), math.floor(y1) + 1):
        for i in range(math.ceil(x0), math.floor(x1) + 1):
            if all(n[0] * i + n[1] * j >= c for n, c in hp):
                pts.append((i, j))
    return pts


def minkowski_sum(P: QPolygon, Q: QPolygon) -> QPolygon:
    return QPolygon.hull(
        (p.x + q.x, p.y + q.y) for p in P.vertices for q in Q.vertices
    )


def _intersect_halfplanes(hps) -> QPolygon | None:
    cands = set()
    for (n1, c1), (n2, c2) in combinations(hps, 2):
        det = n1[0] * n2[1] - n1[1] * n2[0]
        if det == 0:
            continue
        x = (c1 * n2[1] - c2 * n1[1]) / det
        y = (n1[0] * c2 - n2[0] * c1) / det
        cands.add((Fraction(x), Fraction(y)))
    good = [p for p in cands if all(n[0] * p[0] + n[1] * p[1] >= c for n, c in hps)]
    if not good:
        return None
    return QPolygon.hull(good)


def minkowski_difference(P: QPolygon, Q: QPolygon) -> QPolygon | None:
    """``{x : x + Q inside P}``, or ``None`` when that set is empty.

    Each supporting half-plane of ``P`` is moved inward by the support value of
    ``Q`` in its normal direction.
    """
    shifted = []
    for n, c in P.halfplanes():
        h = min(n[0] * q.x + n[1] * q.y for q in Q.vertices)
        shifted.append((n, c - h))
    return _intersect_halfplanes(shifted)


def primitive_vector(v: Sequence) -> tuple[int, int]:
    """Positive rational multiple of ``v`` with coprime integer entries."""
    a, b = Fraction(v[0]), Fraction(v[1])
    if a == 0 and b == 0:
        raise ValueError("zero vector")
    den = math.lcm(a.denominator, b.denominator)
    ia, ib = int(a * den), int(b * den)
    g = math.gcd(ia, ib)
    return (ia // g, ib // g)


def primitive_inward_normals(P: QPolygon) -> list[tuple[int, int]]:
    """One primitive inward normal per edge, in edge order.

    Edge ``k`` runs from vertex ``k`` to vertex ``k+1``.
    """
    if P.is_degenerate:
        raise ValueError("normals need a 2-dimensional polygon")
    return [primitive_vector((a.y - b.y, b.x - a.x)) for a, b in P.edges()]


def edge_is_lattice_primitive(a: LatticePoint, b: LatticePoint) -> bool:
    """True iff the segment ``ab`` contains no lattice points besides its ends."""
    if tuple(a) == tuple(b):
        raise ValueError("edge endpoints coincide")
    return math.gcd(abs(b[0] - a[0]), abs(b[1] - a[1])) == 1


def width_height(P: QPolygon, apex) -> tuple[Fraction, Fraction]:
    """Horizontal width and vertical height of a triangle seen from ``apex``.

    The height is the vertical drop from the apex to the line of the opposite
    edge; the width is the spread between the smallest and largest vertex
    x-coordinates.
    """
    if not P.is_triangle():
        raise ValueError("width/height is defined for triangles")
    try:
        k = P.vertex(apex)
    except ValueError:
        raise ValueError(f"{apex} is not a vertex") from None
    t = P.vertices[k]
    a, b = P.vertices[(k + 1) % 3], P.vertices[(k + 2) % 3]
    if a.x == b.x:
        raise ValueError("opposite edge is vertical")
    y_line = a.y + (b.y - a.y) * (t.x - a.x) / (b.x - a.x)
    xs = [v.x for v in P.vertices]
    return max(xs) - min(xs), t.y - y_line


# -- serialization -----------------------------------------------------------


def fmt_rational(x) -> str:
    return str(Fraction(x))


def parse_rational(text) -> Fraction:
    """Parse ``"num/den"`` or an integer literal; ValueError otherwise."""
    if isinstance(text, int):
        return Fraction(text)
    s = str(text).strip()
    num, sep, den = s.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational {text!r}") from None
    if d == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(n, d)


def polygon_to_json(P: QPolygon) -> list[list[str]]:
    return [[fmt_rational(v.x), fmt_rational(v.y)] for v in P.vertices]


def polygon_from_json(data) -> QPolygon:
    return QPolygon(tuple(qpoint(parse_rational(x), parse_rational(y)) for x, y in data))
