"""Pigeonhole selection of a side line that separates many polygons.

Every side of every cover polygon contributes one support-line entry (so a
line shared by two polygons appears twice, once per owner). A polygon is
joined to an entry when it lies in the entry's outward closed halfplane.
Each pair of polygons is joined through at least one entry, so some entry
has degree at least ``ceil(C(n, 2) / m)`` where ``m`` is the number of
entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Dict, FrozenSet, Hashable, List, Sequence, Tuple

from .cover import CoverResult, grow_cover
from .errors import PairUncoveredError
from .geometry import ConvexPolygon, DirectedLine, HalfPlane, polygon_in_closed_halfplane


@dataclass(frozen=True)
class SupportLineEntry:
    line: DirectedLine
    owner: int
    outward: HalfPlane
    source_side: Tuple[int, int]  # (owner, side index in R_owner)
    source_side_in_p: Hashable  # provenance of that side in the original family


@dataclass(frozen=True)
class IncidenceGraph:
    n: int
    m: int
    edges: FrozenSet[Tuple[int, int]]  # (polygon j, line k)

    def degree(self, k: int) -> int:
        return sum(1 for _, kk in self.edges if kk == k)

    def degrees(self) -> List[int]:
        deg = [0] * self.m
        for _, k in self.edges:
            deg[k] += 1
        return deg

    def neighbours(self, k: int) -> List[int]:
        return sorted(j for j, kk in self.edges if kk == k)


@dataclass(frozen=True)
class SeparatorCertificate:
    owner: int
    line: DirectedLine
    line_index: int
    source_side_in_p: Hashable
    separated: FrozenSet[int]
    degree: int
    m: int


def pigeonhole_bound(n: int, m: int) -> int:
    """``ceil(C(n, 2) / m)``."""
    return -(-comb(n, 2) // m)


def build_support_lines(cover: CoverResult) -> List[SupportLineEntry]:
    entries = []
    for i, poly in enumerate(cover.polygons):
        for k in range(len(poly)):
            inner = poly.inner_halfplane(k)
            entries.append(
                SupportLineEntry(
                    line=inner.line,
                    owner=i,
                    outward=inner.opposite(),
                    source_side=(i, k),
                    source_side_in_p=cover.provenance[i][k],
                )
            )
    return entries


def build_incidence_graph(cover: CoverResult, lines: Sequence[SupportLineEntry]) -> IncidenceGraph:
    """Bipartite polygon/line graph; raises PairUncoveredError if some pair has no edge."""
    polys = cover.polygons
    n = len(polys)
    edges = set()
    for k, entry in enumerate(lines):
        for j, poly in enumerate(polys):
            if j == entry.owner:
                continue
            if polygon_in_closed_halfplane(poly, entry.outward):
                edges.add((j, k))
    covered = {frozenset((j, lines[k].owner)) for j, k in edges}
    for i in range(n):
        for j in range(i + 1, n):
            if frozenset((i, j)) not in covered:
                raise PairUncoveredError(i, j)
    return IncidenceGraph(n=n, m=len(lines), edges=frozenset(edges))


def select_max_degree_line(graph: IncidenceGraph, lines: Sequence[SupportLineEntry]) -> SeparatorCertificate:
    deg = graph.degrees()
    best = max(range(graph.m), key=lambda k: (deg[k], -k))
    entry = lines[best]
    separated = frozenset(graph.neighbours(best))
    cert = SeparatorCertificate(
        owner=entry.owner,
        line=entry.line,
        line_index=best,
        source_side_in_p=entry.source_side_in_p,
        separated=separated,
        degree=len(separated),
        m=graph.m,
    )
    assert cert.degree >= pigeonhole_bound(graph.n, graph.m)
    return cert


@dataclass
class SeparatorRun:
    cover: CoverResult
    lines: List[SupportLineEntry]
    graph: IncidenceGraph
    certificate: SeparatorCertificate


def run_separator(family: Sequence[ConvexPolygon]) -> SeparatorRun:
    cover = grow_cover(family)
    lines = build_support_lines(cover)
    graph = build_incidence_graph(cover, lines)
    return SeparatorRun(cover, lines, graph, select_max_degree_line(graph, lines))


def find_separating_side(family: Sequence[ConvexPolygon]) -> SeparatorCertificate:
    """A side of some input polygon whose line separates it from ``>= ceil(n/18)`` others."""
    return run_separator(family).certificate


def degree_scan(cover: CoverResult, lines: Sequence[SupportLineEntry]) -> Dict[int, int]:
    """Direct containment count per line entry, independent of the graph object."""
    out = {}
    for k, entry in enumerate(lines):
        out[k] = sum(
            1
            for j, poly in enumerate(cover.polygons)
            if j != entry.owner and all(entry.outward.contains(v) for v in poly.vertices)
        )
    return out
