"""Brute-force verification of certificates.

Nothing here touches the cover, separator, pipeline or candidate code: the
candidate lines are re-enumerated in plain integer arithmetic, each one is
materialised as an explicit line and every vertex is evaluated against it.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import numpy as np

from .errors import HashMismatchError
from .geometry import ConvexPolygon, DirectedLine, HalfPlane, Side, polygon_in_closed_halfplane
from .certificates import CertificateRecord, record_from_certificate
from .instances import Instance, instance_hash


@dataclass
class VerificationReport:
    instance_hash: str
    claimed_guarantee: int
    lines_checked: int
    min_observed_max: Optional[int]
    passed: bool
    counterexample: Optional[Tuple[DirectedLine, Tuple[int, int]]] = None
    minimizing_line: Optional[DirectedLine] = None
    witness_ok: bool = True
    reason: str = ""

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = [
            f"verification: {status}",
            f"instance: {self.instance_hash}",
            f"claimed guarantee: {self.claimed_guarantee}",
            f"separating candidate lines checked: {self.lines_checked}",
            f"smallest max(left, right) observed: {self.min_observed_max}",
        ]
        if self.reason:
            out.append(f"reason: {self.reason}")
        if self.counterexample is not None:
            line, (left, right) = self.counterexample
            out.append(f"counterexample line: {line}  (left {left}, right {right})")
        return "\n".join(out)


def _integer_sets(sets: Sequence[ConvexPolygon]):
    den = 1
    for s in sets:
        for x, y in s.vertices:
            den = math.lcm(den, Fraction(x).denominator, Fraction(y).denominator)
    return den, [[(int(x * den), int(y * den)) for x, y in s.vertices] for s in sets]


def _unique_points(isets):
    seen = {}
    for s in isets:
        for v in s:
            seen.setdefault(v, None)
    return list(seen)


def _lines_for_pair(p, q, bound):
    """Base line through p and q plus its eight perturbations, as integer triples.

    A triple ``(A, B, C)`` stands for ``A*x + B*y = C``. Rotation slopes use the
    crude bound ``K > |g|`` derived from the coordinate range, which is enough
    for every off-line vertex to keep its sign.
    """
    a, b = q[1] - p[1], p[0] - q[0]
    c = a * p[0] + b * p[1]
    yield (a, b, c)
    yield (2 * a, 2 * b, 2 * c - 1)
    yield (2 * a, 2 * b, 2 * c + 1)
    k = 8 * (abs(a) + abs(b)) * bound + 1
    for mx2, my2 in ((2 * p[0], 2 * p[1]), (2 * q[0], 2 * q[1]), (p[0] + q[0], p[1] + q[1])):
        for s in (1, -1):
            yield (k * a - 2 * s * b, k * b + 2 * s * a, k * c - s * (b * mx2 - a * my2))


def _sides(isets, A, B, C):
    """(fully-left, fully-right) membership of every set."""
    left, right = [], []
    for verts in isets:
        lo = hi = False
        for x, y in verts:
            v = A * x + B * y - C
            if v > 0:
                hi = True
            elif v < 0:
                lo = True
        left.append(not hi)
        right.append(not lo)
    return left, right


def _scan(args):
    isets, i, j, p_range = args
    points = _unique_points(isets)
    bound = max(max(abs(x), abs(y)) for x, y in points)
    pair_sets = [isets[i], isets[j]]
    best = None  # ((max, pi, order), triple, (left, right))
    checked = 0
    order = 0
    for pi in p_range:
        p = points[pi]
        for qi in range(pi + 1, len(points)):
            q = points[qi]
            for triple in _lines_for_pair(p, q, bound):
                order += 1
                lft, rgt = _sides(pair_sets, *triple)
                if not ((lft[0] and rgt[1]) or (lft[1] and rgt[0])):
                    continue
                checked += 1
                lft, rgt = _sides(isets, *triple)
                counts = (sum(lft), sum(rgt))
                key = (max(counts), pi, order)
                if best is None or key < best[0]:
                    best = (key, triple, counts)
    return checked, best


def _scale_back(triple, den) -> DirectedLine:
    a, b, c = triple
    return DirectedLine(a * den, b * den, c)


def oracle_minmax(sets: Sequence[ConvexPolygon], i: int, j: int, threads: int = 1):
    """Exhaustive minimum of max(left, right) over candidate lines separating sets i and j.

    Returns ``(minimum, line, (left, right), lines_checked)``; minimum is None
    if no candidate separates the pair.
    """
    den, isets = _integer_sets(sets)
    n_points = len(_unique_points(isets))
    if threads > 1 and n_points > 40:
        chunks = [(isets, i, j, range(t, n_points, threads)) for t in range(threads)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_scan, chunks))
    else:
        results = [_scan((isets, i, j, range(n_points)))]
    checked = sum(r[0] for r in results)
    found = [r[1] for r in results if r[1] is not None]
    if not found:
        return None, None, None, checked
    key, triple, counts = min(found, key=lambda r: r[0])
    return key[0], _scale_back(triple, den), counts, checked


def _witness_consistent(sets, rec: CertificateRecord) -> bool:
    """The witness line separates the pair and one of its closed sides holds exactly ``separated``."""
    line = rec.witness_line
    a, b = rec.pair
    for side in (Side.LEFT, Side.RIGHT):
        ha, hb = HalfPlane(line, side), HalfPlane(line, Side(-side))
        if polygon_in_closed_halfplane(sets[a], ha) and polygon_in_closed_halfplane(sets[b], hb):
            sides = [tuple(k for k, s in enumerate(sets) if polygon_in_closed_halfplane(s, h)) for h in (ha, hb)]
            return tuple(rec.separated) in sides
    return False


def verify_certificate(inst: Instance, cert, threads: int = 1) -> VerificationReport:
    """Check that every candidate line separating the pair leaves >= guarantee sets on a side."""
    rec = cert if isinstance(cert, CertificateRecord) else record_from_certificate(inst, cert)
    digest = instance_hash(inst)
    if rec.instance_hash != digest:
        raise HashMismatchError(f"certificate is for {rec.instance_hash}, instance is {digest}")
    n = inst.n
    i, j = rec.pair
    minimum, line, counts, checked = oracle_minmax(inst.sets, i, j, threads=threads)
    needed = -(-n // 18)
    report = VerificationReport(
        instance_hash=digest,
        claimed_guarantee=rec.guarantee,
        lines_checked=checked,
        min_observed_max=minimum,
        passed=False,
        minimizing_line=line,
    )
    if minimum is None:
        report.reason = "no candidate line separates the pair"
        return report
    report.witness_ok = _witness_consistent(inst.sets, rec)
    if minimum < rec.guarantee:
        report.counterexample = (line, counts)
        report.reason = f"a separating line leaves at most {minimum} sets on either side"
    elif rec.guarantee < needed:
        report.reason = f"guarantee {rec.guarantee} is below ceil(n/18) = {needed}"
    elif not report.witness_ok:
        report.reason = "witness line does not match the recorded pair / separated sets"
    else:
        report.passed = True
    return report


# ---------------------------------------------------------------- sampling


def sample_separating_counts(
    sets: Sequence[ConvexPolygon],
    i: int,
    j: int,
    samples: int,
    seed: int,
    resolution: int = 2**16,
) -> np.ndarray:
    """``max(left, right)`` for ``samples`` random lines separating sets i and j.

    Directions are drawn uniformly from the arc of normals that admit a
    separating line, rounded to lattice normals, and offsets uniformly from
    the separating range; sampled lines are generic with probability ~1.
    """
    rng = np.random.default_rng(seed)
    den, isets = _integer_sets(sets)
    A = np.array(isets[i], dtype=float)
    B = np.array(isets[j], dtype=float)
    diffs = (B[None, :, :] - A[:, None, :]).reshape(-1, 2)
    ref = B.mean(axis=0) - A.mean(axis=0)
    phi = np.arctan2(diffs[:, 1], diffs[:, 0]) - math.atan2(ref[1], ref[0])
    phi = (phi + np.pi) % (2 * np.pi) - np.pi
    lo, hi = phi.max() - np.pi / 2, phi.min() + np.pi / 2
    base = math.atan2(ref[1], ref[0])

    X = np.array([v[0] for s in isets for v in s], dtype=object)
    Y = np.array([v[1] for s in isets for v in s], dtype=object)
    offsets = np.cumsum([0] + [len(s) for s in isets[:-1]])
    bound = max(abs(int(v)) for v in np.concatenate([X, Y]))
    use_int = 4 * resolution * resolution * (bound + 1) < 2**62
    if use_int:
        X, Y = X.astype(np.int64), Y.astype(np.int64)
    ia = np.arange(offsets[i], offsets[i] + len(isets[i]))
    ib = np.arange(offsets[j], offsets[j] + len(isets[j]))

    out = []
    attempts = 0
    while len(out) < samples:
        attempts += 1
        if attempts > 1000:
            raise RuntimeError(f"could not sample separating lines for sets {i} and {j}")
        batch = max(1024, samples - len(out))
        theta = base + rng.uniform(lo, hi, size=batch)
        a = np.rint(resolution * np.cos(theta)).astype(np.int64)
        b = np.rint(resolution * np.sin(theta)).astype(np.int64)
        if not use_int:
            a, b = a.astype(object), b.astype(object)
        proj = a[:, None] * X[None, :] + b[:, None] * Y[None, :]
        h_a = proj[:, ia].max(axis=1)
        h_b = proj[:, ib].min(axis=1)
        ok = h_a <= h_b
        if not ok.any():
            continue
        proj, h_a, h_b = proj[ok], h_a[ok], h_b[ok]
        k = rng.integers(0, resolution + 1, size=len(h_a))
        if not use_int:
            k = k.astype(object)
        # line: resolution * (a x + b y) = resolution * h_a + k * (h_b - h_a)
        c = resolution * h_a + k * (h_b - h_a)
        vals = resolution * proj - c[:, None]
        sgn = (vals > 0).astype(np.int8) - (vals < 0).astype(np.int8)
        left = (np.maximum.reduceat(sgn, offsets, axis=1) <= 0).sum(axis=1)
        right = (np.minimum.reduceat(sgn, offsets, axis=1) >= 0).sum(axis=1)
        out.extend(np.maximum(left, right).tolist())
    return np.asarray(out[:samples])
