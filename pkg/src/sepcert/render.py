"""SVG drawings of instances, covers and witness lines."""

from __future__ import annotations

import decimal
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .geometry import ConvexPolygon, DirectedLine, Point, rational

PALETTE = ("#4c72b0", "#dd8452", "#55a868", "#c44e52", "#8172b3", "#937860", "#da8bc3", "#8c8c8c")

_CTX = decimal.Context(prec=30)


@dataclass(frozen=True)
class RenderStyle:
    # widths are fractions of the viewport's larger side
    set_stroke: Fraction = Fraction(1, 600)
    cover_stroke: Fraction = Fraction(1, 400)
    line_stroke: Fraction = Fraction(1, 300)
    set_color: int = 0
    pair_color: int = 3
    separated_color: int = 1
    cover_color: int = 2
    line_color: int = 7
    padding: Fraction = field(default=Fraction(1, 20))

    def __post_init__(self):
        if rational(self.padding) < 0:
            raise ValueError("padding must be nonnegative")

    def color(self, idx: int) -> str:
        return PALETTE[idx % len(PALETTE)]


def _num(v) -> str:
    d = _CTX.divide(decimal.Decimal(Fraction(v).numerator), decimal.Decimal(Fraction(v).denominator))
    text = format(d.normalize(_CTX), "f")
    return "0" if text in ("-0", "") else text


def _points_attr(poly: ConvexPolygon) -> str:
    return " ".join(f"{_num(x)},{_num(-y)}" for x, y in poly.vertices)


def _clip_line_to_box(line: DirectedLine, box) -> Optional[Tuple[Point, Point]]:
    x0, y0, x1, y1 = box
    pts = set()
    a, b, c = line.a, line.b, line.c
    if b != 0:
        for x in (x0, x1):
            y = Fraction(c - a * x, b)
            if y0 <= y <= y1:
                pts.add((Fraction(x), y))
    if a != 0:
        for y in (y0, y1):
            x = Fraction(c - b * y, a)
            if x0 <= x <= x1:
                pts.add((x, Fraction(y)))
    if len(pts) < 2:
        return None
    ordered = sorted(pts, key=lambda p: -b * p[0] + a * p[1])
    return ordered[0], ordered[-1]


def render_svg(
    sets: Sequence[ConvexPolygon],
    witness: Optional[DirectedLine] = None,
    pair: Tuple[int, ...] = (),
    separated: Sequence[int] = (),
    cover: Sequence[ConvexPolygon] = (),
    clipped: Sequence[ConvexPolygon] = (),
    style: RenderStyle = RenderStyle(),
) -> bytes:
    """Input sets filled, cover/clipped polygons outlined, witness drawn across the viewport."""
    everything = list(sets) + list(cover) + list(clipped)
    xs = [v[0] for p in everything for v in p.vertices]
    ys = [v[1] for p in everything for v in p.vertices]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1
    pad = rational(style.padding) * span
    box = (min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad)
    width, height = box[2] - box[0], box[3] - box[1]

    svg = ET.Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "version": "1.1",
            "viewBox": f"{_num(box[0])} {_num(-box[3])} {_num(width)} {_num(height)}",
            "width": "800",
            "height": _num(Fraction(800) * Fraction(height) / Fraction(width)),
        },
    )
    ET.SubElement(svg, "title").text = "separating pair certificate" if witness is not None else "instance"
    sel = set(separated)
    group = ET.SubElement(svg, "g", {"id": "sets"})
    for k, poly in enumerate(sets):
        color = style.pair_color if k in pair else style.separated_color if k in sel else style.set_color
        ET.SubElement(
            group,
            "polygon",
            {
                "id": f"set-{k + 1}",
                "points": _points_attr(poly),
                "fill": style.color(color),
                "fill-opacity": "0.6",
                "stroke": "#000000",
                "stroke-width": _num(style.set_stroke * span),
            },
        )
    for name, polys, dash in (("clipped", clipped, True), ("cover", cover, False)):
        if not polys:
            continue
        group = ET.SubElement(svg, "g", {"id": name})
        for k, poly in enumerate(polys):
            attrs = {
                "id": f"{name}-{k + 1}",
                "points": _points_attr(poly),
                "fill": "none",
                "stroke": style.color(style.cover_color),
                "stroke-width": _num(style.cover_stroke * span),
            }
            if dash:
                attrs["stroke-dasharray"] = _num(4 * style.cover_stroke * span)
            ET.SubElement(group, "polygon", attrs)
    if witness is not None:
        seg = _clip_line_to_box(witness, box)
        if seg is not None:
            (ax, ay), (bx, by) = seg
            ET.SubElement(
                svg,
                "line",
                {
                    "id": "witness",
                    "x1": _num(ax),
                    "y1": _num(-ay),
                    "x2": _num(bx),
                    "y2": _num(-by),
                    "stroke": style.color(style.line_color),
                    "stroke-width": _num(style.line_stroke * span),
                },
            )
    ET.indent(svg)
    return ('<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(svg, encoding="unicode") + "\n").encode("utf-8")
