"""End-to-end construction of a pair whose separating lines all split off many sets.

For every pair of sets the pipeline picks, among the candidate lines that
weakly separate them, one minimizing the larger of its two closed-side set
counts. Each set is then shrunk-wrapped by the closed halfplanes of its lines
(inside a bounding triangle), the separator runs on those polygons, and the
winning side line identifies the pair.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .candidates import CandidateFamily
from .cover import CoverResult, check_pairwise_disjoint
from .errors import InvalidInputError
from .geometry import (
    ConvexPolygon,
    DirectedLine,
    HalfPlane,
    Side,
    clip_polygon,
    point,
    polygon_in_closed_halfplane,
)
from .separator import SeparatorCertificate, pigeonhole_bound, run_separator

log = logging.getLogger(__name__)


def required_guarantee(n: int) -> int:
    """``ceil(n / 18)``, the integer form of the bound."""
    return -(-n // 18)


@dataclass(frozen=True)
class SideCounts:
    left: int
    right: int

    @property
    def max(self) -> int:
        return max(self.left, self.right)


@dataclass(frozen=True)
class MinMaxLine:
    i: int
    j: int
    line: DirectedLine
    counts: SideCounts
    # which closed side of ``line`` holds set i
    side_i: Side

    @property
    def g(self) -> int:
        return self.counts.max

    def halfplane(self, k: int) -> HalfPlane:
        """Closed halfplane containing set ``k`` (``k`` is ``i`` or ``j``)."""
        side = self.side_i if k == self.i else Side(-self.side_i)
        return HalfPlane(self.line, side)


@dataclass
class TheoremCertificate:
    pair: Tuple[int, int]
    witness: MinMaxLine
    guarantee: int
    separated_by_witness: Tuple[int, ...]
    clipped_family: List[ConvexPolygon]
    cover: Optional[CoverResult] = None
    separator: Optional[SeparatorCertificate] = None
    minmax: Dict[Tuple[int, int], MinMaxLine] = field(default_factory=dict, repr=False)

    @property
    def n(self) -> int:
        return len(self.clipped_family)


def count_sides_of_line(sets: Sequence[ConvexPolygon], line: DirectedLine) -> SideCounts:
    left = right = 0
    for s in sets:
        vals = [line.evaluate(v) for v in s.vertices]
        left += all(v <= 0 for v in vals)
        right += all(v >= 0 for v in vals)
    return SideCounts(left, right)


def _side_holding(poly: ConvexPolygon, line: DirectedLine) -> Optional[Side]:
    vals = [line.evaluate(v) for v in poly.vertices]
    if all(v <= 0 for v in vals):
        return Side.LEFT
    if all(v >= 0 for v in vals):
        return Side.RIGHT
    return None


def _minmax_from_candidate(sets, fam: CandidateFamily, i: int, j: int, g: int, cand: int) -> MinMaxLine:
    line = fam.line(cand)
    counts = count_sides_of_line(sets, line)
    side_i = _side_holding(sets[i], line)
    if counts.max != g or side_i is None or _side_holding(sets[j], line) != Side(-side_i):
        raise AssertionError(f"candidate {cand} does not realise its sign pattern for pair ({i}, {j})")
    return MinMaxLine(i, j, line, counts, side_i)


def minmax_separating_line(sets: Sequence[ConvexPolygon], i: int, j: int, family: Optional[CandidateFamily] = None) -> MinMaxLine:
    fam = family if family is not None else CandidateFamily(sets)
    g, cand = fam.minmax_pair(i, j)
    return _minmax_from_candidate(sets, fam, i, j, g, cand)


def all_minmax_lines(sets: Sequence[ConvexPolygon], family: Optional[CandidateFamily] = None) -> Dict[Tuple[int, int], MinMaxLine]:
    fam = family if family is not None else CandidateFamily(sets)
    return {
        (i, j): _minmax_from_candidate(sets, fam, i, j, g, cand)
        for (i, j), (g, cand) in sorted(fam.minmax_all().items())
    }


def bounding_triangle(sets: Sequence[ConvexPolygon]) -> ConvexPolygon:
    """Right triangle with axis-parallel legs whose interior holds every vertex.

    The bounding box is grown by its own width/height on every side and the
    triangle, anchored at the grown box's lower-left corner, has legs three
    times the grown box's sides.
    """
    if not sets:
        raise InvalidInputError("bounding_triangle needs at least one set")
    xs = [v[0] for s in sets for v in s.vertices]
    ys = [v[1] for s in sets for v in s.vertices]
    w = (max(xs) - min(xs)) or 1
    h = (max(ys) - min(ys)) or 1
    x0 = min(xs) - w
    y0 = min(ys) - h
    return ConvexPolygon((point(x0, y0), point(x0 + 9 * w, y0), point(x0, y0 + 9 * h)))


def build_clipped_polygons(
    sets: Sequence[ConvexPolygon],
    triangle: ConvexPolygon,
    lines: Dict[Tuple[int, int], MinMaxLine],
) -> List[ConvexPolygon]:
    """``P_i`` = triangle ∩ (closed halfplanes of the pair lines holding set i).

    Side provenance is ``("T", k)`` for triangle sides and ``("L", i, j)``
    (``i < j``) for a side cut by the line of pair (i, j).
    """
    n = len(sets)
    base = ConvexPolygon(triangle.vertices, tuple(("T", k) for k in range(len(triangle))))
    out = []
    for i in range(n):
        poly = base
        for j in range(n):
            if j == i:
                continue
            key = (min(i, j), max(i, j))
            poly = clip_polygon(poly, lines[key].halfplane(i), tag=("L",) + key)
            if poly is None:
                raise AssertionError(f"clipped polygon {i} became empty at pair {key}")
        out.append(poly)
    return out


def validate_sets(sets: Sequence[ConvexPolygon], minimum: int = 2) -> None:
    if len(sets) < minimum:
        raise InvalidInputError(f"need at least {minimum} sets, got {len(sets)}")
    bad = check_pairwise_disjoint(sets)
    if bad is not None:
        raise InvalidInputError(f"sets {bad[0] + 1} and {bad[1] + 1} have overlapping interiors", witness=bad)


def solve(sets: Sequence[ConvexPolygon]) -> TheoremCertificate:
    """Find a pair (A, B) with every separating line leaving ``>= guarantee`` sets on one side.

    Indices in the returned certificate are 0-based.
    """
    sets = list(sets)
    validate_sets(sets)
    n = len(sets)
    fam = CandidateFamily(sets)
    log.debug("candidate family: %d vertices, %d candidates", len(fam.points), len(fam))
    lines = all_minmax_lines(sets, fam)
    triangle = bounding_triangle(sets)
    clipped = build_clipped_polygons(sets, triangle, lines)

    if n == 2:
        witness = lines[(0, 1)]
        return TheoremCertificate(
            pair=(0, 1),
            witness=witness,
            guarantee=witness.g,
            separated_by_witness=_far_side(sets, witness, 0),
            clipped_family=clipped,
            minmax=lines,
        )

    run = run_separator(clipped)
    sep = run.certificate
    owner_side = sep.source_side_in_p
    tag = clipped[owner_side[0]].provenance[owner_side[1]]
    if tag[0] != "L":
        raise AssertionError("selected line is a bounding-triangle side")
    key = (tag[1], tag[2])
    witness = lines[key]
    if witness.line != sep.line:
        raise AssertionError("provenance points at a different line")
    owner = sep.owner
    separated = _far_side(sets, witness, owner)
    bound = pigeonhole_bound(n, sep.m)
    if not (witness.g >= len(separated) >= sep.degree >= bound):
        raise AssertionError(
            f"guarantee chain broken: g={witness.g} separated={len(separated)} degree={sep.degree} bound={bound}"
        )
    return TheoremCertificate(
        pair=key,
        witness=witness,
        guarantee=witness.g,
        separated_by_witness=separated,
        clipped_family=clipped,
        cover=run.cover,
        separator=sep,
        minmax=lines,
    )


def _far_side(sets, witness: MinMaxLine, owner: int) -> Tuple[int, ...]:
    """Indices of sets inside the closed halfplane of ``witness`` opposite ``owner``."""
    other = witness.j if owner == witness.i else witness.i
    h = witness.halfplane(other)
    return tuple(k for k, s in enumerate(sets) if polygon_in_closed_halfplane(s, h))


def meets_bound(cert: TheoremCertificate) -> bool:
    n = cert.n
    return cert.guarantee >= (1 if n == 2 else required_guarantee(n))


__all__ = [
    "SideCounts",
    "MinMaxLine",
    "TheoremCertificate",
    "count_sides_of_line",
    "minmax_separating_line",
    "all_minmax_lines",
    "bounding_triangle",
    "build_clipped_polygons",
    "solve",
    "required_guarantee",
    "meets_bound",
]
