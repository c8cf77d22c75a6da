from fractions import Fraction

import pytest

from conftest import square, triangle
from sepcert.cover import assert_cover_conditions, check_pairwise_disjoint
from sepcert.errors import InvalidInputError
from sepcert.geometry import DirectedLine, point, polygon_in_closed_halfplane
from sepcert.oracle import oracle_minmax
from sepcert.pipeline import (
    SideCounts,
    all_minmax_lines,
    bounding_triangle,
    build_clipped_polygons,
    count_sides_of_line,
    meets_bound,
    minmax_separating_line,
    required_guarantee,
    solve,
)


def _strictly_inside(tri, v):
    return all(tri.side_line(k).evaluate(v) != 0 for k in range(3)) and tri.contains_point(v)


def test_required_guarantee():
    assert [required_guarantee(n) for n in (2, 3, 18, 19, 36, 37)] == [1, 1, 1, 2, 2, 3]


def test_count_sides_examples(d1):
    assert count_sides_of_line(d1, DirectedLine(2, 0, 7)) == SideCounts(2, 1)
    # 3x + y = 9 passes through (3, 0) and cuts square 3
    assert count_sides_of_line(d1, DirectedLine(3, 1, 9)) == SideCounts(1, 1)


def test_count_sides_partition_for_avoiding_line(d1):
    c = count_sides_of_line(d1, DirectedLine(1, 1, 100))
    assert c.left + c.right == 3


def test_count_sides_closed_convention():
    # a set touching the line counts on both sides
    assert count_sides_of_line([square(0, 0)], DirectedLine(1, 0, 1)) == SideCounts(1, 0)
    assert count_sides_of_line([square(0, 0)], DirectedLine(1, 0, 0)) == SideCounts(0, 1)


def test_d1_minmax_pair_12(d1):
    mm = minmax_separating_line(d1, 0, 1)
    assert mm.g == 1
    assert oracle_minmax(d1, 0, 1)[0] == 1
    assert polygon_in_closed_halfplane(d1[0], mm.halfplane(0))
    assert polygon_in_closed_halfplane(d1[1], mm.halfplane(1))


def test_two_sets_minmax_is_one():
    assert minmax_separating_line([square(0, 0), square(5, 3)], 0, 1).g == 1


def test_collinear_squares_outer_pair():
    sets = [square(0, 0), square(3, 0), square(6, 0)]
    mm = minmax_separating_line(sets, 0, 2)
    assert mm.g >= 1
    assert mm.g == oracle_minmax(sets, 0, 2)[0]


def test_bounding_triangle_examples(d1):
    for sets in ([square(0, 0)], d1, [triangle(-5, 7, 3), square(Fraction(1, 3), 0)]):
        tri = bounding_triangle(sets)
        assert len(tri) == 3
        assert all(_strictly_inside(tri, v) for s in sets for v in s.vertices)
    tri = bounding_triangle(d1)
    assert all(_strictly_inside(tri, point(x, y)) for x in (0, 7) for y in (0, 7))
    with pytest.raises(InvalidInputError):
        bounding_triangle([])


def _check_clipped(sets):
    lines = all_minmax_lines(sets)
    clipped = build_clipped_polygons(sets, bounding_triangle(sets), lines)
    for c, p in zip(sets, clipped):
        assert all(p.contains_point(v) for v in c.vertices)
    assert check_pairwise_disjoint(clipped) is None
    tri = bounding_triangle(sets)
    for i, p in enumerate(clipped):
        for k, tag in enumerate(p.provenance):
            if tag[0] == "T":
                assert p.side_line(k) == tri.side_line(tag[1])
            else:
                assert tag[0] == "L" and i in tag[1:]
                assert p.side_line(k) == lines[(tag[1], tag[2])].line
    return clipped


def test_clipped_two_sets():
    clipped = _check_clipped([square(0, 0), square(5, 3)])
    assert len(clipped) == 2


def test_clipped_d1(d1):
    assert len(_check_clipped(d1)) == 3


def test_solve_two_sets():
    cert = solve([square(0, 0), square(5, 3)])
    assert cert.pair == (0, 1)
    assert cert.guarantee == 1
    assert cert.cover is None and cert.separator is None
    assert meets_bound(cert)


def test_solve_d1(d1):
    cert = solve(d1)
    assert cert.guarantee >= 1
    i, j = cert.pair
    assert oracle_minmax(d1, i, j)[0] == cert.guarantee
    # cover of the clipped family is valid
    assert assert_cover_conditions(cert.clipped_family, cert.cover).passed


def test_solve_witness_comes_from_a_pair_line():
    sets = [square(0, 0), square(3, 0), square(6, 0), square(0, 3), square(3, 3)]
    cert = solve(sets)
    assert cert.witness.line == cert.separator.line
    assert cert.witness.line == cert.minmax[cert.pair].line
    assert cert.guarantee >= len(cert.separated_by_witness) >= cert.separator.degree


def test_solve_rejects_bad_input():
    with pytest.raises(InvalidInputError):
        solve([square(0, 0)])
    with pytest.raises(InvalidInputError) as exc:
        solve([square(0, 0, 2), square(1, 1, 2), square(9, 9)])
    assert exc.value.witness == (0, 1)
