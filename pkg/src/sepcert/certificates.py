"""Certificate and cover files.

Set indices are 1-based on disk and 0-based in memory; side indices are
0-based everywhere. Line coefficients are canonical integers stored as
strings so that no JSON reader can round them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Tuple

from .errors import ParseError
from .geometry import DirectedLine, format_rational
from .instances import Instance, instance_hash


@dataclass(frozen=True)
class CertificateRecord:
    """The checkable part of a certificate (0-based indices)."""

    instance_hash: str
    n: int
    pair: Tuple[int, int]
    guarantee: int
    witness_line: DirectedLine
    separated: Tuple[int, ...]


def record_from_certificate(inst: Instance, cert) -> CertificateRecord:
    return CertificateRecord(
        instance_hash=instance_hash(inst),
        n=inst.n,
        pair=tuple(cert.pair),
        guarantee=cert.guarantee,
        witness_line=cert.witness.line,
        separated=tuple(cert.separated_by_witness),
    )


def _dump(doc) -> bytes:
    return (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode("utf-8")


def certificate_json(inst: Instance, cert) -> bytes:
    line = cert.witness.line
    doc = {
        "instance_hash": instance_hash(inst),
        "n": inst.n,
        "pair": [cert.pair[0] + 1, cert.pair[1] + 1],
        "guarantee": cert.guarantee,
        "required": -(-inst.n // 18),
        "witness_line": {"a": str(line.a), "b": str(line.b), "c": str(line.c)},
        "witness_counts": {"left": cert.witness.counts.left, "right": cert.witness.counts.right},
        "separated": [k + 1 for k in cert.separated_by_witness],
        "degree": cert.separator.degree if cert.separator else None,
        "support_lines": cert.separator.m if cert.separator else None,
    }
    return _dump(doc)


def parse_certificate(data) -> CertificateRecord:
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    try:
        wl = doc["witness_line"]
        n = int(doc["n"])
        pair = tuple(int(v) - 1 for v in doc["pair"])
        if len(pair) != 2 or not all(0 <= v < n for v in pair) or pair[0] == pair[1]:
            raise ValueError(f"bad pair {doc['pair']}")
        return CertificateRecord(
            instance_hash=str(doc["instance_hash"]),
            n=n,
            pair=pair,
            guarantee=int(doc["guarantee"]),
            witness_line=DirectedLine(int(wl["a"]), int(wl["b"]), int(wl["c"])),
            separated=tuple(int(v) - 1 for v in doc["separated"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed certificate: {exc}") from None


def _poly_doc(poly, prov):
    return {
        "vertices": [[format_rational(x), format_rational(y)] for x, y in poly.vertices],
        "provenance": prov,
    }


def _clip_tag(tag):
    if tag[0] == "T":
        return ["T", tag[1]]
    return ["L", tag[1] + 1, tag[2] + 1]


def cover_json(inst: Instance, cert) -> bytes:
    """Clipped family and its cover, with side provenance, for figure regeneration.

    Clipped-polygon sides carry ``["T", k]`` (bounding-triangle side k) or
    ``["L", i, j]`` (line of pair i, j); cover sides carry ``[i, k]``, side k of
    clipped polygon i.
    """
    doc = {
        "instance_hash": instance_hash(inst),
        "clipped": [_poly_doc(p, [_clip_tag(t) for t in p.provenance]) for p in cert.clipped_family],
        "cover": None,
    }
    if cert.cover is not None:
        doc["cover"] = [
            _poly_doc(p, [[i + 1, k] for i, k in prov])
            for p, prov in zip(cert.cover.polygons, cert.cover.provenance)
        ]
        doc["total_sides"] = cert.cover.total_sides
        doc["reductions"] = cert.cover.reductions_performed
    return _dump(doc)
