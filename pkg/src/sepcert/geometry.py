"""Exact rational primitives in the plane.

Coordinates are Python ``int`` or :class:`fractions.Fraction`; floats are
rejected at every entry point. Integer-valued fractions are collapsed to
``int`` so that the common case of lattice input stays on the fast path.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, NamedTuple, Optional, Sequence, Tuple, Union

Rational = Union[int, Fraction]


def rational(value) -> Rational:
    """Convert ``value`` to an exact rational, refusing floats.

    Accepts ints, Fractions and strings of the form ``"p"`` or ``"p/q"``.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            num, _, den = text.partition("/")
            num_i, den_i = int(num), int(den)
            if den_i == 0:
                raise ZeroDivisionError(f"zero denominator in {value!r}")
            return rational(Fraction(num_i, den_i))
        return int(text)
    raise TypeError(f"cannot use {type(value).__name__} as an exact coordinate")


def format_rational(value: Rational) -> str:
    value = rational(value)
    if isinstance(value, int):
        return str(value)
    return f"{value.numerator}/{value.denominator}"


def _quotient(num: int, den: int) -> Rational:
    if den < 0:
        num, den = -num, -den
    if num % den == 0:
        return num // den
    return Fraction(num, den)


class Point(NamedTuple):
    x: Rational
    y: Rational


def point(x, y) -> Point:
    return Point(rational(x), rational(y))


class Orientation(enum.IntEnum):
    CW = -1
    COLLINEAR = 0
    CCW = 1


class Side(enum.IntEnum):
    """Position relative to a line: the sign of ``a*x + b*y - c``."""

    LEFT = -1
    ON = 0
    RIGHT = 1


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def cross(p: Point, q: Point, r: Point):
    """Exact cross product (q - p) x (r - p)."""
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    return Orientation(_sign(cross(p, q, r)))


@dataclass(frozen=True)
class DirectedLine:
    """The line ``a*x + b*y = c``; its left halfplane is ``a*x + b*y <= c``.

    Coefficients are stored in canonical form: coprime integers with the first
    nonzero of ``(a, b)`` positive. Two DirectedLines compare equal iff they
    describe the same point set, which is what the multiset keys rely on.
    """

    a: int
    b: int
    c: int

    def __post_init__(self):
        a, b, c = (rational(v) for v in (self.a, self.b, self.c))
        if a == 0 and b == 0:
            raise ValueError("degenerate line: a and b are both zero")
        den = math.lcm(*(Fraction(v).denominator for v in (a, b, c)))
        ia, ib, ic = (int(v * den) for v in (a, b, c))
        g = math.gcd(math.gcd(ia, ib), ic)
        if ia < 0 or (ia == 0 and ib < 0):
            g = -g
        object.__setattr__(self, "a", ia // g)
        object.__setattr__(self, "b", ib // g)
        object.__setattr__(self, "c", ic // g)

    def evaluate(self, p: Point):
        return self.a * p[0] + self.b * p[1] - self.c

    def side(self, p: Point) -> Side:
        return Side(_sign(self.evaluate(p)))

    def key(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __str__(self):
        return f"{self.a}*x + {self.b}*y = {self.c}"


def side_of_line(line: DirectedLine, p: Point) -> Side:
    return line.side(p)


def line_through(p: Point, q: Point) -> DirectedLine:
    if p[0] == q[0] and p[1] == q[1]:
        raise ValueError(f"line_through needs two distinct points, got {p} twice")
    a = q[1] - p[1]
    b = p[0] - q[0]
    return DirectedLine(a, b, a * p[0] + b * p[1])


def intersect_lines(l1: DirectedLine, l2: DirectedLine) -> Optional[Point]:
    """Unique common point of two lines, or None if they are parallel."""
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        return None
    x = _quotient(l1.c * l2.b - l2.c * l1.b, det)
    y = _quotient(l1.a * l2.c - l2.a * l1.c, det)
    return Point(x, y)


@dataclass(frozen=True)
class HalfPlane:
    """Closed halfplane on ``side`` (LEFT or RIGHT) of ``line``."""

    line: DirectedLine
    side: Side

    def __post_init__(self):
        if self.side not in (Side.LEFT, Side.RIGHT):
            raise ValueError("a halfplane side must be LEFT or RIGHT")

    @classmethod
    def leq(cls, a, b, c) -> "HalfPlane":
        """The halfplane ``a*x + b*y <= c`` for arbitrary (non-canonical) coefficients."""
        line = DirectedLine(a, b, c)
        # canonicalization may have flipped the sign of the coefficients
        a, b = rational(a), rational(b)
        flipped = (a != 0 and _sign(a) != _sign(line.a)) or (a == 0 and _sign(b) != _sign(line.b))
        return cls(line, Side.RIGHT if flipped else Side.LEFT)

    def contains(self, p: Point) -> bool:
        return line_side_ok(self.line.evaluate(p), self.side)

    def opposite(self) -> "HalfPlane":
        return HalfPlane(self.line, Side(-self.side))


def line_side_ok(value, side: Side) -> bool:
    return value <= 0 if side == Side.LEFT else value >= 0


def _half(d) -> int:
    return 0 if d[1] > 0 or (d[1] == 0 and d[0] > 0) else 1


def _winding(verts: Sequence[Point]) -> int:
    """Number of full turns made by the edge directions of an all-left-turn polygon."""
    k = len(verts)
    dirs = [(verts[(s + 1) % k][0] - verts[s][0], verts[(s + 1) % k][1] - verts[s][1]) for s in range(k)]
    wraps = 0
    for s in range(k):
        d1, d2 = dirs[s], dirs[(s + 1) % k]
        h1, h2 = _half(d1), _half(d2)
        if h1 > h2 or (h1 == h2 and d1[0] * d2[1] - d1[1] * d2[0] < 0):
            wraps += 1
    return wraps


def _polygon_area2(vertices: Sequence[Point]):
    n = len(vertices)
    return sum(
        vertices[k][0] * vertices[(k + 1) % n][1] - vertices[(k + 1) % n][0] * vertices[k][1]
        for k in range(n)
    )


@dataclass(frozen=True, eq=True)
class ConvexPolygon:
    """Strictly convex polygon with CCW vertices.

    Side ``k`` runs from ``vertices[k]`` to ``vertices[k+1]``; the interior is
    on its left. ``provenance[k]`` is an opaque tag identifying where side
    ``k``'s supporting line came from (None when untracked). Clockwise input
    is reversed, with the provenance tags carried along.
    """

    vertices: Tuple[Point, ...]
    provenance: Tuple[Optional[Hashable], ...] = field(default=None, compare=True)

    def __post_init__(self):
        verts = tuple(point(*v) for v in self.vertices)
        k = len(verts)
        if k < 3:
            raise InvalidPolygonError(f"polygon needs at least 3 vertices, got {k}")
        prov = self.provenance
        prov = (None,) * k if prov is None else tuple(prov)
        if len(prov) != k:
            raise ValueError("provenance must have one entry per side")
        if _polygon_area2(verts) < 0:
            # side k of the reversed list is side k-2 (mod k) of the original
            verts = verts[::-1]
            prov = tuple(prov[(k - 2 - s) % k] for s in range(k))
        for s in range(k):
            o = orientation(verts[s - 1], verts[s], verts[(s + 1) % k])
            if o != Orientation.CCW:
                raise InvalidPolygonError(
                    f"vertices {(s - 1) % k}, {s}, {(s + 1) % k} are not strictly convex",
                    witness=((s - 1) % k, s, (s + 1) % k),
                )
        if k > 4 and _winding(verts) != 1:
            raise InvalidPolygonError("vertices wind around more than once (self-intersecting)")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "provenance", prov)
        xs = [v[0] for v in verts]
        ys = [v[1] for v in verts]
        object.__setattr__(self, "_bbox", (min(xs), min(ys), max(xs), max(ys)))

    def __len__(self):
        return len(self.vertices)

    @property
    def bbox(self):
        return self._bbox

    def side(self, k: int) -> Tuple[Point, Point]:
        n = len(self.vertices)
        return self.vertices[k % n], self.vertices[(k + 1) % n]

    def side_line(self, k: int) -> DirectedLine:
        return line_through(*self.side(k))

    def inner_halfplane(self, k: int) -> HalfPlane:
        """Closed halfplane bounded by side ``k`` that contains the polygon."""
        line = self.side_line(k)
        probe = self.vertices[(k + 2) % len(self.vertices)]
        return HalfPlane(line, line.side(probe))

    def area2(self):
        """Twice the area (exact)."""
        return _polygon_area2(self.vertices)

    def contains_point(self, p: Point) -> bool:
        """Closed containment."""
        n = len(self.vertices)
        return all(cross(self.vertices[k], self.vertices[(k + 1) % n], p) >= 0 for k in range(n))

    def with_provenance(self, provenance) -> "ConvexPolygon":
        return ConvexPolygon(self.vertices, tuple(provenance))


class InvalidPolygonError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def polygon_in_closed_halfplane(poly: ConvexPolygon, h: HalfPlane) -> bool:
    return all(h.contains(v) for v in poly.vertices)


def _bboxes_overlap_open(p: ConvexPolygon, q: ConvexPolygon) -> bool:
    a, b = p.bbox, q.bbox
    return a[0] < b[2] and b[0] < a[2] and a[1] < b[3] and b[1] < a[3]


def _edge_separates(p: ConvexPolygon, q: ConvexPolygon) -> bool:
    verts = p.vertices
    n = len(verts)
    for k in range(n):
        u, v = verts[k], verts[(k + 1) % n]
        if all(cross(u, v, w) <= 0 for w in q.vertices):
            return True
    return False


def interiors_intersect(p: ConvexPolygon, q: ConvexPolygon) -> bool:
    """True iff the open interiors of two convex polygons meet.

    Separating-axis test restricted to edge lines: interior-disjoint convex
    polygons always admit a weakly separating line through an edge of one of
    them.
    """
    if not _bboxes_overlap_open(p, q):
        return False
    return not (_edge_separates(p, q) or _edge_separates(q, p))


def _merge_collinear(verts, prov):
    changed = True
    while changed and len(verts) >= 3:
        changed = False
        k = len(verts)
        for s in range(k):
            if cross(verts[s - 1], verts[s], verts[(s + 1) % k]) == 0:
                # sides s-1 and s lie on one line; keep the older tag if any
                keep = prov[s - 1] if prov[s - 1] is not None else prov[s]
                verts = verts[:s] + verts[s + 1:]
                prov = prov[:s] + prov[s + 1:]
                prov[(s - 1) % len(prov)] = keep
                changed = True
                break
    return verts, prov


def clip_polygon(poly: ConvexPolygon, h: HalfPlane, tag: Optional[Hashable] = None) -> Optional[ConvexPolygon]:
    """Exact ``poly`` ∩ ``h``; None when the result has empty interior.

    The new side cut along ``h.line`` (if any) gets provenance ``tag``.
    """
    verts = poly.vertices
    prov = poly.provenance
    n = len(verts)
    vals = [h.line.evaluate(v) * (1 if h.side == Side.LEFT else -1) for v in verts]
    # vals <= 0 means inside; normalized so that the kept side is nonpositive
    if all(v <= 0 for v in vals):
        return poly
    if all(v >= 0 for v in vals):
        return None
    out_v, out_p = [], []
    for k in range(n):
        u, w = verts[k], verts[(k + 1) % n]
        fu, fw = vals[k], vals[(k + 1) % n]
        if fu <= 0:
            out_v.append(u)
            if fw <= 0:
                out_p.append(prov[k])
            elif fu == 0:
                out_p.append(tag)
            else:
                out_p.append(prov[k])
                out_v.append(_segment_cut(u, w, fu, fw))
                out_p.append(tag)
        elif fw < 0:
            out_v.append(_segment_cut(u, w, fu, fw))
            out_p.append(prov[k])
    out_v, out_p = _merge_collinear(out_v, out_p)
    if len(out_v) < 3:
        return None
    return ConvexPolygon(tuple(out_v), tuple(out_p))


def _segment_cut(u: Point, w: Point, fu, fw) -> Point:
    t = Fraction(fu) / (fu - fw)
    return point(u[0] + t * (w[0] - u[0]), u[1] + t * (w[1] - u[1]))
