"""Instances: seeded generation, validation and the JSON file format.

File format::

    {"label": str, "seed": int | null,
     "sets": [{"vertices": [["p/q", "p/q"], ...]}, ...]}

Coordinates are exact rationals written as ``"p/q"`` or integer strings
(bare JSON integers are tolerated); floats are rejected.
"""

from __future__ import annotations

import hashlib
import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .cover import check_pairwise_disjoint
from .errors import GenerationFailedError, ParseError, ValidationError
from .geometry import ConvexPolygon, InvalidPolygonError, Point, cross, format_rational, point, rational


@dataclass(frozen=True)
class Instance:
    sets: Tuple[ConvexPolygon, ...]
    seed: Optional[int] = None
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(self.sets))

    @property
    def n(self) -> int:
        return len(self.sets)


# ---------------------------------------------------------------- generation


def _strict_hull(points: Sequence[Tuple[int, int]]) -> List[Tuple[int, int]]:
    pts = sorted(set(points))
    if len(pts) < 3:
        return pts

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower, upper = chain(pts), chain(reversed(pts))
    return lower[:-1] + upper[:-1]


def _random_shape(rng: random.Random, radius: int, k_min: int, k_max: int, shape: str, tries: int):
    if shape == "square":
        return [(0, 0), (2 * radius, 0), (2 * radius, 2 * radius), (0, 2 * radius)]
    for _ in range(tries):
        k = rng.randint(k_min, k_max)
        angles = sorted(rng.uniform(0, 2 * math.pi) for _ in range(k))
        pts = [(round(radius * math.cos(t)), round(radius * math.sin(t))) for t in angles]
        hull = _strict_hull(pts)
        if len(hull) >= max(3, k_min):
            return hull
    return None


def random_disjoint_polygons(
    n: int,
    seed: int,
    k_min: int = 3,
    k_max: int = 6,
    spread: float = 1.5,
    min_gap: Union[int, Fraction] = 10,
    cell: int = 1000,
    shape: str = "random",
    tries: int = 50,
) -> Instance:
    """``n`` random strictly convex lattice polygons, pairwise at distance >= ``min_gap``.

    Polygons are dropped into distinct cells of a square grid with about
    ``spread * n`` cells and jittered inside their cell. ``shape`` is
    ``"random"`` (k_min..k_max vertices on a circle, then hulled) or
    ``"square"``. The same arguments always produce the same instance.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 3 <= k_min <= k_max:
        raise ValueError("need 3 <= k_min <= k_max")
    if shape not in ("random", "square"):
        raise ValueError(f"unknown shape {shape!r}")
    min_gap = rational(min_gap)
    room = cell - min_gap
    half_gap = rational(Fraction(min_gap) / 2)
    if room < 8:
        raise GenerationFailedError(f"min_gap {min_gap} leaves no room in a cell of size {cell}")
    rng = random.Random(seed)
    cols = math.ceil(math.sqrt(n * spread))
    rows = math.ceil(n * spread / cols)
    slots = rng.sample(range(cols * rows), n)
    sets = []
    for slot in slots:
        row, col = divmod(slot, cols)
        radius = rng.randint(max(2, int(room * 0.2)), int(room // 2))
        verts = _random_shape(rng, radius, k_min, k_max, shape, tries)
        if verts is None:
            raise GenerationFailedError(f"could not draw a {k_min}..{k_max}-gon after {tries} tries")
        xs = [v[0] for v in verts]
        ys = [v[1] for v in verts]
        w, h = max(xs) - min(xs), max(ys) - min(ys)
        if w > room or h > room:
            raise GenerationFailedError("polygon does not fit its cell")
        ox = col * cell + half_gap + rng.randint(0, int(room - w)) - min(xs)
        oy = row * cell + half_gap + rng.randint(0, int(room - h)) - min(ys)
        sets.append(ConvexPolygon(tuple(point(x + ox, y + oy) for x, y in verts)))
    return Instance(tuple(sets), seed=seed, label=f"random-n{n}-seed{seed}")


# ---------------------------------------------------------------- validation


@dataclass
class ValidationReport:
    problems: List[Tuple[str, object, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    @property
    def first(self):
        return self.problems[0] if self.problems else None

    def __str__(self):
        if self.ok:
            return "valid"
        return "; ".join(msg for _, _, msg in self.problems)


def validate_instance(inst) -> ValidationReport:
    """Check strict convexity and pairwise interior-disjointness.

    ``inst`` is an Instance or a sequence of raw vertex lists; raw input is
    what lets non-convex sets be reported rather than rejected on sight.
    """
    raw = inst.sets if isinstance(inst, Instance) else inst
    report = ValidationReport()
    polys = []
    for idx, s in enumerate(raw):
        if isinstance(s, ConvexPolygon):
            polys.append(s)
            continue
        try:
            polys.append(ConvexPolygon(tuple(s)))
        except InvalidPolygonError as exc:
            report.problems.append(("convexity", (idx, exc.witness), f"set {idx + 1}: {exc}"))
    if report.ok:
        bad = check_pairwise_disjoint(polys)
        if bad is not None:
            report.problems.append(
                ("overlap", bad, f"sets {bad[0] + 1} and {bad[1] + 1} have overlapping interiors")
            )
    return report


# ---------------------------------------------------------------- serialization


def _vertex_doc(v: Point):
    return [format_rational(v[0]), format_rational(v[1])]


def serialize_instance(inst: Instance) -> bytes:
    lines = [
        "{",
        f'  "label": {json.dumps(inst.label)},',
        f'  "seed": {json.dumps(inst.seed)},',
        '  "sets": [',
    ]
    body = [
        '    {"vertices": ' + json.dumps([_vertex_doc(v) for v in s.vertices], separators=(", ", ": ")) + "}"
        for s in inst.sets
    ]
    lines.append(",\n".join(body))
    lines += ["  ]", "}"]
    return ("\n".join(lines) + "\n").encode("utf-8")


def instance_hash(inst: Instance) -> str:
    return "sha256:" + hashlib.sha256(serialize_instance(inst)).hexdigest()


def _locate(text: str, token: str):
    pos = text.find(token)
    if pos < 0:
        return None, None
    line = text.count("\n", 0, pos) + 1
    return line, pos - (text.rfind("\n", 0, pos) + 1) + 1


def _coord(value, text):
    if isinstance(value, bool) or isinstance(value, float) or not isinstance(value, (int, str)):
        raise ParseError(f"coordinate {value!r} is not an exact rational", *_locate(text, json.dumps(value)))
    try:
        return rational(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {value!r}: {exc}", *_locate(text, json.dumps(value))) from None


def parse_instance(data: Union[bytes, str]) -> Instance:
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict) or not isinstance(doc.get("sets"), list):
        raise ParseError('expected an object with a "sets" list', 1, 1)
    label = doc.get("label", "")
    seed = doc.get("seed")
    if not isinstance(label, str) or not (seed is None or (isinstance(seed, int) and not isinstance(seed, bool))):
        raise ParseError('"label" must be a string and "seed" an integer or null', 1, 1)
    raw = []
    for idx, entry in enumerate(doc["sets"]):
        verts = entry.get("vertices") if isinstance(entry, dict) else None
        if not isinstance(verts, list) or not all(isinstance(v, list) and len(v) == 2 for v in verts):
            raise ParseError(f"set {idx + 1}: expected a list of [x, y] vertices", *_locate(text, '"vertices"'))
        raw.append([Point(_coord(x, text), _coord(y, text)) for x, y in verts])
    report = validate_instance(raw)
    if not report.ok:
        raise ValidationError(report)
    return Instance(tuple(ConvexPolygon(tuple(v)) for v in raw), seed=seed, label=label)
