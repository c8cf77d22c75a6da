import math

import pytest

from sepcert.geometry import ConvexPolygon, point
from sepcert.instances import Instance


def square(x, y, s=1):
    return ConvexPolygon((point(x, y), point(x + s, y), point(x + s, y + s), point(x, y + s)))


def rect(x0, y0, x1, y1):
    return ConvexPolygon((point(x0, y0), point(x1, y0), point(x1, y1), point(x0, y1)))


def triangle(x, y, s=1):
    return ConvexPolygon((point(x, y), point(x + s, y), point(x, y + s)))


def lattice_ngon(k, radius, cx=0, cy=0):
    """Nearly regular k-gon on the integer lattice (large radius keeps it strictly convex)."""
    pts = [
        point(cx + round(radius * math.cos(2 * math.pi * t / k)), cy + round(radius * math.sin(2 * math.pi * t / k)))
        for t in range(k)
    ]
    return ConvexPolygon(tuple(pts))


@pytest.fixture
def d1():
    return [square(0, 0, 2), square(5, 0, 2), square(0, 5, 2)]


@pytest.fixture
def d1_instance(d1):
    return Instance(tuple(d1), seed=None, label="D1")
