from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import rect, square
from sepcert.geometry import (
    ConvexPolygon,
    DirectedLine,
    HalfPlane,
    InvalidPolygonError,
    Orientation,
    Side,
    clip_polygon,
    format_rational,
    interiors_intersect,
    intersect_lines,
    line_through,
    orientation,
    point,
    polygon_in_closed_halfplane,
    rational,
    side_of_line,
)

H = Fraction(1, 2)


def test_orientation_examples():
    assert orientation(point(0, 0), point(1, 0), point(0, 1)) == Orientation.CCW
    assert orientation(point(0, 0), point(1, 1), point(2, 2)) == Orientation.COLLINEAR
    assert orientation(point(0, 0), point(0, 1), point(1, 0)) == Orientation.CW


def test_side_of_line_examples():
    x1 = DirectedLine(1, 0, 1)
    assert side_of_line(x1, point(0, 0)) == Side.LEFT
    assert side_of_line(x1, point(1, 5)) == Side.ON
    assert side_of_line(x1, point(2, 0)) == Side.RIGHT


def test_polygon_in_closed_halfplane_examples():
    unit = square(0, 0)
    assert polygon_in_closed_halfplane(unit, HalfPlane.leq(1, 0, 1))
    assert not polygon_in_closed_halfplane(unit, HalfPlane.leq(1, 0, H))
    assert polygon_in_closed_halfplane(unit, HalfPlane.leq(-1, 0, 0))


def test_interiors_intersect_examples():
    unit = square(0, 0)
    assert not interiors_intersect(unit, rect(2, 0, 3, 1))
    assert not interiors_intersect(unit, rect(1, 0, 2, 1))
    assert interiors_intersect(unit, rect(H, 0, 1 + H, 1))


def test_interiors_intersect_corner_touch_and_containment():
    assert not interiors_intersect(square(0, 0), square(1, 1))
    assert interiors_intersect(square(0, 0, 10), square(4, 4))


def test_clip_examples():
    sq = square(0, 0, 2)
    half = clip_polygon(sq, HalfPlane.leq(1, 0, 1))
    assert set(half.vertices) == set(rect(0, 0, 1, 2).vertices)
    assert clip_polygon(sq, HalfPlane.leq(1, 0, 3)).vertices == sq.vertices
    assert clip_polygon(sq, HalfPlane.leq(1, 0, 0)) is None


def test_clip_provenance_tags_new_side():
    sq = ConvexPolygon(square(0, 0, 2).vertices, ("a", "b", "c", "d"))
    out = clip_polygon(sq, HalfPlane.leq(1, 0, 1), tag="cut")
    assert len(out) == 4
    assert "cut" in out.provenance
    k = out.provenance.index("cut")
    assert out.side_line(k) == DirectedLine(1, 0, 1)


def test_line_through_examples():
    assert line_through(point(0, 0), point(1, 0)).key() == DirectedLine(0, 1, 0).key()
    assert line_through(point(1, 0), point(1, 1)).key() == DirectedLine(1, 0, 1).key()
    assert line_through(point(0, 0), point(2, 2)).key() == DirectedLine(1, -1, 0).key()
    with pytest.raises(ValueError):
        line_through(point(1, 1), point(1, 1))


def test_directed_line_canonical_form():
    assert DirectedLine(4, -6, 2) == DirectedLine(2, -3, 1)
    assert DirectedLine(-2, 3, -1) == DirectedLine(2, -3, 1)
    assert DirectedLine(Fraction(1, 2), Fraction(1, 3), 1) == DirectedLine(3, 2, 6)
    with pytest.raises(ValueError):
        DirectedLine(0, 0, 1)


def test_intersect_lines():
    assert intersect_lines(DirectedLine(1, 0, 1), DirectedLine(0, 1, 2)) == point(1, 2)
    assert intersect_lines(DirectedLine(1, 0, 1), DirectedLine(1, 0, 3)) is None


def test_rational_rejects_floats_and_parses_strings():
    assert rational("3/6") == Fraction(1, 2)
    assert rational("-7") == -7
    assert format_rational(Fraction(-3, 4)) == "-3/4"
    assert format_rational(Fraction(8, 2)) == "4"
    with pytest.raises((TypeError, ValueError)):
        rational(0.5)
    with pytest.raises((ValueError, ZeroDivisionError)):
        rational("1/0")


def test_polygon_reorients_clockwise_input():
    cw = ConvexPolygon((point(0, 0), point(0, 1), point(1, 1), point(1, 0)), ("w", "n", "e", "s"))
    assert cw.area2() > 0
    for k in range(len(cw)):
        a, b = cw.side(k)
        assert orientation(a, b, cw.vertices[(k + 2) % 4]) == Orientation.CCW
    # provenance follows its side: "w" is the side on x = 0
    k = cw.provenance.index("w")
    assert cw.side_line(k).key() == DirectedLine(1, 0, 0).key()


@pytest.mark.parametrize(
    "verts",
    [
        [(0, 0), (1, 0), (2, 0), (1, 1)],  # collinear triple
        [(0, 0), (2, 0), (1, 1), (2, 2), (0, 2)],  # reflex vertex
        [(0, 0), (1, 1)],  # too few vertices
        [(0, 0), (1, 0), (1, 0), (0, 1)],  # repeated vertex
        [(0, 0), (4, 0), (1, 3), (2, -2), (3, 3)],  # star
    ],
)
def test_invalid_polygons_rejected(verts):
    with pytest.raises(InvalidPolygonError):
        ConvexPolygon(tuple(point(x, y) for x, y in verts))


def test_contains_point_closed():
    sq = square(0, 0, 2)
    assert sq.contains_point(point(0, 1))
    assert sq.contains_point(point(1, 1))
    assert not sq.contains_point(point(3, 1))


# ---------------------------------------------------------------- properties

coords = st.integers(-50, 50)
pts = st.tuples(coords, coords)


def _det(p, q, r):
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


@settings(max_examples=1000, deadline=None)
@given(pts, pts, pts)
def test_orientation_matches_determinant(p, q, r):
    d = _det(p, q, r)
    expected = Orientation.CCW if d > 0 else Orientation.CW if d < 0 else Orientation.COLLINEAR
    assert orientation(point(*p), point(*q), point(*r)) == expected


@settings(max_examples=300, deadline=None)
@given(pts, pts, st.integers(1, 9))
def test_line_canonical_form_is_invariant_under_scaling(p, q, k):
    if p == q:
        return
    line = line_through(point(*p), point(*q))
    assert DirectedLine(k * line.a, k * line.b, k * line.c) == line
    assert line.side(point(*p)) == Side.ON and line.side(point(*q)) == Side.ON


@settings(max_examples=300, deadline=None)
@given(st.integers(-20, 20), st.integers(-20, 20), st.integers(1, 20), st.integers(-5, 5), st.integers(-5, 5), st.integers(-60, 60))
def test_clip_result_is_subset(x, y, s, a, b, c):
    if a == 0 and b == 0:
        return
    sq = square(x, y, s)
    h = HalfPlane.leq(a, b, c)
    out = clip_polygon(sq, h)
    if out is None:
        return
    for v in out.vertices:
        assert h.contains(v)
        assert sq.contains_point(v)
    assert 0 < out.area2() <= sq.area2()


@settings(max_examples=300, deadline=None)
@given(st.integers(-10, 10), st.integers(-10, 10), st.integers(1, 6), st.integers(-10, 10), st.integers(-10, 10), st.integers(1, 6))
def test_interiors_intersect_symmetric_and_matches_boxes(x1, y1, s1, x2, y2, s2):
    p, q = square(x1, y1, s1), square(x2, y2, s2)
    got = interiors_intersect(p, q)
    assert got == interiors_intersect(q, p)
    boxes_overlap = max(x1, x2) < min(x1 + s1, x2 + s2) and max(y1, y2) < min(y1 + s1, y2 + s2)
    assert got == boxes_overlap
