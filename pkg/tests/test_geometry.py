from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from negcurve.geometry import (
    QPolygon,
    area,
    convex_hull,
    edge_is_lattice_primitive,
    lattice_points,
    minkowski_difference,
    minkowski_sum,
    parse_rational,
    polygon_from_json,
    polygon_to_json,
    primitive_inward_normals,
    qpoint,
    width_height,
)

small = st.integers(-4, 4)
pts = st.lists(st.tuples(small, small), min_size=3, max_size=7)


def tri(*vs):
    return QPolygon(tuple(qpoint(*v) for v in vs))


def test_unit_square_points_and_order():
    P = QPolygon.hull([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert lattice_points(P) == [(0, 0), (1, 0), (0, 1), (1, 1)]
    assert area(P) == 1


def test_degenerate_polygons():
    seg = QPolygon((qpoint(-1, -1), qpoint(0, 0)))
    assert seg.is_degenerate and area(seg) == 0
    assert lattice_points(seg) == [(-1, -1), (0, 0)]
    pt = QPolygon((qpoint(Fraction(1, 2), 0),))
    assert lattice_points(pt) == []
    with pytest.raises(ValueError):
        QPolygon((qpoint(0, 0), qpoint(1, 1), qpoint(2, 2)))
    with pytest.raises(ValueError):
        tri((0, 0), (0, 1), (1, 0))


def test_minkowski_difference_empty():
    assert minkowski_difference(tri((0, 0), (1, 0), (0, 1)), tri((0, 0), (3, 0), (0, 3))) is None


@settings(max_examples=60, deadline=None)
@given(pts, pts)
def test_sum_then_difference_recovers(a, b):
    A, B = QPolygon.hull(a), QPolygon.hull(b)
    S = minkowski_sum(A, B)
    D = minkowski_difference(S, B)
    assert D is not None
    assert D.contains_polygon(A)
    assert area(S) >= area(A) + area(B)


@settings(max_examples=60, deadline=None)
@given(pts)
def test_lattice_points_brute_force(a):
    P = QPolygon.hull(a)
    brute = sorted(
        ((i, j) for i in range(-5, 6) for j in range(-5, 6) if P.contains((i, j))),
        key=lambda p: (p[1], p[0]),
    )
    assert lattice_points(P) == brute


def test_primitive_normals_and_width_height():
    T = tri((0, 0), (2, 0), (0, 2))
    assert primitive_inward_normals(T) == [(0, 1), (-1, -1), (1, 0)]
    assert width_height(T, (0, 2)) == (2, 2)
    with pytest.raises(ValueError):
        width_height(T, (1, 1))


def test_edge_primitive():
    assert edge_is_lattice_primitive((-1, -1), (1, 0))
    assert not edge_is_lattice_primitive((0, 0), (2, 2))
    with pytest.raises(ValueError):
        edge_is_lattice_primitive((1, 1), (1, 1))


def test_rational_parsing_and_json():
    assert parse_rational("13/49") == Fraction(13, 49)
    assert parse_rational("-2") == -2
    for bad in ("1/0", "a", "1/2/3", ""):
        with pytest.raises(ValueError):
            parse_rational(bad)
    P = tri((Fraction(-4, 3), Fraction(-2, 3)), (2, 1), (0, 3))
    assert polygon_from_json(polygon_to_json(P)) == P


def test_hull_drops_collinear():
    assert len(convex_hull([(0, 0), (1, 0), (2, 0), (0, 1)])) == 3
