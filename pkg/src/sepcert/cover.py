"""Growing a family of convex polygons until no side is reducible.

A side ``s`` of polygon ``P`` is reducible when the two neighbouring side
lines meet strictly beyond ``s`` and the triangle they cut off with ``s``
avoids the interior of every other polygon. Absorbing that triangle removes
``s``; repeating until nothing is reducible yields a cover whose total side
count is at most ``9n - 9``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .errors import InvalidInputError
from .geometry import (
    ConvexPolygon,
    Point,
    interiors_intersect,
    intersect_lines,
)

log = logging.getLogger(__name__)

SideRef = Tuple[int, int]


@dataclass(frozen=True)
class ReducibilityTriangle:
    apex: Point
    base_side_index: int
    triangle: ConvexPolygon


def side_bound(n: int) -> int:
    return 9 * n - 9


def reducibility_triangle(poly: ConvexPolygon, s: int) -> Optional[ReducibilityTriangle]:
    """The triangle beyond side ``s`` bounded by the adjacent side lines.

    Returns None (unbounded) when those lines are parallel or only meet on
    the polygon's own side of ``s``.
    """
    verts = poly.vertices
    k = len(verts)
    prev_start, start = verts[(s - 1) % k], verts[s % k]
    end, next_end = verts[(s + 1) % k], verts[(s + 2) % k]
    d_prev = (start[0] - prev_start[0], start[1] - prev_start[1])
    d_next = (next_end[0] - end[0], next_end[1] - end[1])
    # the two turns at the ends of s add up to less than a half-turn
    if d_prev[0] * d_next[1] - d_prev[1] * d_next[0] <= 0:
        return None
    apex = intersect_lines(poly.side_line(s - 1), poly.side_line(s + 1))
    tri = ConvexPolygon((start, apex, end))
    return ReducibilityTriangle(apex, s % k, tri)


def is_reducible(family: Sequence[ConvexPolygon], i: int, s: int) -> bool:
    tri = reducibility_triangle(family[i], s)
    if tri is None:
        return False
    return not any(interiors_intersect(tri.triangle, other) for j, other in enumerate(family) if j != i)


def reduce_side(poly: ConvexPolygon, tri: ReducibilityTriangle) -> ConvexPolygon:
    """``poly`` ∪ ``tri``: the base side disappears and its endpoints merge into the apex."""
    k = len(poly)
    s = tri.base_side_index
    verts, prov = [], []
    for idx in range(k):
        if idx == s:
            verts.append(tri.apex)
            prov.append(poly.provenance[(s + 1) % k])
        elif idx == (s + 1) % k:
            continue
        else:
            verts.append(poly.vertices[idx])
            prov.append(poly.provenance[idx])
    return ConvexPolygon(tuple(verts), tuple(prov))


@dataclass
class CoverResult:
    polygons: List[ConvexPolygon]
    # provenance[i][k] = (i, original side index) whose line carries side k of R_i
    provenance: List[Tuple[SideRef, ...]]
    total_sides: int
    reductions_performed: int

    @property
    def n(self) -> int:
        return len(self.polygons)


def check_pairwise_disjoint(family: Sequence[ConvexPolygon]) -> Optional[Tuple[int, int]]:
    """First pair (i, j) with overlapping interiors, or None."""
    for i in range(len(family)):
        for j in range(i + 1, len(family)):
            if interiors_intersect(family[i], family[j]):
                return (i, j)
    return None


def grow_cover(family: Sequence[ConvexPolygon]) -> CoverResult:
    """Absorb reducibility triangles until none is left.

    Sides are scanned polygon by polygon in index order and the scan restarts
    after every reduction. Because polygons only ever grow, a side found
    non-reducible stays non-reducible as long as its own supporting line and
    both neighbouring lines are unchanged, so those verdicts are memoized.
    """
    n = len(family)
    if n < 3:
        raise InvalidInputError(f"cover growth needs at least 3 polygons, got {n}")
    bad = check_pairwise_disjoint(family)
    if bad is not None:
        raise InvalidInputError(f"polygons {bad[0]} and {bad[1]} have overlapping interiors", witness=bad)

    polys = [
        ConvexPolygon(p.vertices, tuple((i, s) for s in range(len(p))))
        for i, p in enumerate(family)
    ]
    blocked = set()
    reductions = 0
    progress = True
    while progress:
        progress = False
        for i in range(n):
            poly = polys[i]
            k = len(poly)
            for s in range(k):
                prov = poly.provenance
                key = (i, prov[s - 1], prov[s], prov[(s + 1) % k])
                if key in blocked:
                    continue
                tri = reducibility_triangle(poly, s)
                if tri is None or any(
                    interiors_intersect(tri.triangle, other) for j, other in enumerate(polys) if j != i
                ):
                    blocked.add(key)
                    continue
                polys[i] = reduce_side(poly, tri)
                reductions += 1
                progress = True
                break
            if progress:
                break

    total = sum(len(p) for p in polys)
    log.debug("cover: n=%d reductions=%d total_sides=%d", n, reductions, total)
    return CoverResult(
        polygons=polys,
        provenance=[tuple(p.provenance) for p in polys],
        total_sides=total,
        reductions_performed=reductions,
    )


@dataclass
class Check:
    name: str
    passed: bool
    witness: object = None


@dataclass
class CoverReport:
    checks: List[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __str__(self):
        return "\n".join(
            f"{c.name}: {'pass' if c.passed else 'FAIL'}" + ("" if c.passed else f" ({c.witness})")
            for c in self.checks
        )


def assert_cover_conditions(original: Sequence[ConvexPolygon], cover: CoverResult, fixed_point: bool = True) -> CoverReport:
    """Check containment, side support, disjointness and the side bound.

    With ``fixed_point`` the exhaustive irreducibility scan is included too.
    Failures are reported with a witness, never raised.
    """
    if len(original) != cover.n:
        raise ValueError("original family and cover differ in length")
    report = CoverReport()

    witness = None
    for i, (p, r) in enumerate(zip(original, cover.polygons)):
        for v in p.vertices:
            if not r.contains_point(v):
                witness = (i, v)
                break
        if witness:
            break
    report.checks.append(Check("containment", witness is None, witness))

    witness = None
    for i, r in enumerate(cover.polygons):
        for k in range(len(r)):
            oi, os_ = cover.provenance[i][k]
            if oi != i or r.side_line(k) != original[i].side_line(os_):
                witness = (i, k, (oi, os_))
                break
        if witness:
            break
    report.checks.append(Check("side_support", witness is None, witness))

    bad = check_pairwise_disjoint(cover.polygons)
    report.checks.append(Check("disjoint", bad is None, bad))

    n = cover.n
    total = sum(len(r) for r in cover.polygons)
    ok = total == cover.total_sides and total <= side_bound(n)
    report.checks.append(Check("side_bound", ok, None if ok else (total, side_bound(n))))

    if fixed_point:
        witness = None
        for i, r in enumerate(cover.polygons):
            for k in range(len(r)):
                if is_reducible(cover.polygons, i, k):
                    witness = (i, k)
                    break
            if witness:
                break
        report.checks.append(Check("irreducible", witness is None, witness))
    return report
