"""Finite family of lines standing in for "every line in the plane".

Which sets sit in which closed halfplane of a line depends only on the sign
of each set vertex with respect to the line. Those sign vectors are constant
on the faces of the arrangement of lines-through-vertices, and every face has
a line through two vertices in its closure. So the family consists of, for
every pair ``(p, q)`` of distinct vertices, the line ``pq`` and eight
infinitesimal perturbations of it:

* translations to either side (all vertices on ``pq`` move to one side),
* rotations either way about ``p``, about ``q`` and about the midpoint of
  ``pq`` (vertices on ``pq`` split according to their position along it).

Sign vectors are computed directly from the exact integer value of the base
line at every vertex; a concrete rational line realising a given member is
only built on request (:meth:`CandidateFamily.line`).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .errors import NoSeparatorError
from .geometry import ConvexPolygon, DirectedLine

# perturbation kinds, in tie-break order
BASE, SHIFT_RIGHT, SHIFT_LEFT, ROT_P_POS, ROT_P_NEG, ROT_Q_POS, ROT_Q_NEG, ROT_MID_POS, ROT_MID_NEG = range(9)
N_KINDS = 9

_CHUNK = 2048


def _sgn(arr) -> np.ndarray:
    # np.sign does not handle object arrays of Python ints
    return (arr > 0).astype(np.int8) - (arr < 0).astype(np.int8)


def _common_denominator(sets: Sequence[ConvexPolygon]) -> int:
    den = 1
    for s in sets:
        for x, y in s.vertices:
            den = math.lcm(den, Fraction(x).denominator, Fraction(y).denominator)
    return den


class CandidateFamily:
    """All candidate lines of an instance together with their side counts.

    Candidate ``c`` is perturbation kind ``c // n_pairs`` of base pair
    ``c % n_pairs``; base lines therefore precede all perturbed ones and the
    candidate index is the tie-break order used throughout.
    """

    def __init__(self, sets: Sequence[ConvexPolygon]):
        self.sets = list(sets)
        self.n = len(self.sets)
        self.scale = _common_denominator(self.sets)
        index: Dict[Tuple[int, int], int] = {}
        vert_u: List[int] = []
        offsets: List[int] = []
        for s in self.sets:
            offsets.append(len(vert_u))
            for x, y in s.vertices:
                key = (int(x * self.scale), int(y * self.scale))
                vert_u.append(index.setdefault(key, len(index)))
        self.points: List[Tuple[int, int]] = list(index)
        self._vert_u = np.asarray(vert_u, dtype=np.intp)
        self._offsets = np.asarray(offsets, dtype=np.intp)

        u = len(self.points)
        bound = max((max(abs(x), abs(y)) for x, y in self.points), default=0)
        # largest intermediate is |g2| <= 16 * bound**2
        dtype = np.int64 if 16 * bound * bound < 2**62 else object
        self._X = np.array([p[0] for p in self.points], dtype=dtype)
        self._Y = np.array([p[1] for p in self.points], dtype=dtype)
        self.pair_p, self.pair_q = (np.asarray(a, dtype=np.intp) for a in np.triu_indices(u, 1))
        self.n_pairs = len(self.pair_p)

        self.in_left = np.zeros((N_KINDS * self.n_pairs, self.n), dtype=bool)
        self.in_right = np.zeros_like(self.in_left)
        for start in range(0, self.n_pairs, _CHUNK):
            self._fill(start, min(start + _CHUNK, self.n_pairs))
        self.left_count = self.in_left.sum(axis=1)
        self.right_count = self.in_right.sum(axis=1)
        self.g = np.maximum(self.left_count, self.right_count)

    def __len__(self):
        return N_KINDS * self.n_pairs

    def _base(self, sl):
        X, Y = self._X, self._Y
        p, q = self.pair_p[sl], self.pair_q[sl]
        a = Y[q] - Y[p]
        b = X[p] - X[q]
        c = a * X[p] + b * Y[p]
        return p, q, a, b, c

    def _patterns(self, sl):
        """Sign patterns over unique points for every kind, shape (9, pairs, points)."""
        X, Y = self._X[None, :], self._Y[None, :]
        p, q, a, b, c = self._base(sl)
        a, b, c = a[:, None], b[:, None], c[:, None]
        f = a * X + b * Y - c
        sf = _sgn(f)
        on = f == 0
        Xp, Yp = self._X[p][:, None], self._Y[p][:, None]
        Xq, Yq = self._X[q][:, None], self._Y[q][:, None]
        gp = _sgn(-b * (X - Xp) + a * (Y - Yp))
        gq = _sgn(-b * (X - Xq) + a * (Y - Yq))
        gm = _sgn(-b * (2 * X - Xp - Xq) + a * (2 * Y - Yp - Yq))
        one = np.int8(1)
        return (
            sf,
            np.where(on, one, sf),
            np.where(on, -one, sf),
            np.where(on, gp, sf),
            np.where(on, -gp, sf),
            np.where(on, gq, sf),
            np.where(on, -gq, sf),
            np.where(on, gm, sf),
            np.where(on, -gm, sf),
        )

    def _fill(self, start, stop):
        sl = slice(start, stop)
        for kind, pat in enumerate(self._patterns(sl)):
            full = pat[:, self._vert_u]
            rows = slice(kind * self.n_pairs + start, kind * self.n_pairs + stop)
            self.in_left[rows] = np.maximum.reduceat(full, self._offsets, axis=1) <= 0
            self.in_right[rows] = np.minimum.reduceat(full, self._offsets, axis=1) >= 0

    def pattern(self, cand: int) -> np.ndarray:
        """Sign (-1/0/+1) of every unique point with respect to candidate ``cand``."""
        kind, pair = divmod(cand, self.n_pairs)
        return np.asarray(self._patterns(slice(pair, pair + 1))[kind][0], dtype=int)

    def separates(self, cand: int, i: int, j: int) -> bool:
        return bool(
            (self.in_left[cand, i] and self.in_right[cand, j])
            or (self.in_left[cand, j] and self.in_right[cand, i])
        )

    def line(self, cand: int) -> DirectedLine:
        """An exact line realising the sign pattern of candidate ``cand``.

        Canonicalization may reverse the line's direction, in which case the
        pattern is realised with left and right exchanged.
        """
        kind, pair = divmod(cand, self.n_pairs)
        px, py = self.points[self.pair_p[pair]]
        qx, qy = self.points[self.pair_q[pair]]
        a, b = qy - py, px - qx
        c = a * px + b * py
        if kind in (SHIFT_RIGHT, SHIFT_LEFT):
            # every nonzero value has magnitude >= 1 on the integer lattice
            sgn = 1 if kind == SHIFT_RIGHT else -1
            c = c - Fraction(sgn, 2)
        elif kind != BASE:
            sgn = 1 if kind in (ROT_P_POS, ROT_Q_POS, ROT_MID_POS) else -1
            if kind in (ROT_P_POS, ROT_P_NEG):
                mx2, my2 = 2 * px, 2 * py
            elif kind in (ROT_Q_POS, ROT_Q_NEG):
                mx2, my2 = 2 * qx, 2 * qy
            else:
                mx2, my2 = px + qx, py + qy
            g2max = max(abs(-b * (2 * x - mx2) + a * (2 * y - my2)) for x, y in self.points)
            k = 2 * g2max + 1
            a, b, c = (
                a - Fraction(2 * sgn * b, k),
                b + Fraction(2 * sgn * a, k),
                c - Fraction(sgn * (b * mx2 - a * my2), k),
            )
        return DirectedLine(a * self.scale, b * self.scale, c)

    def minmax_pair(self, i: int, j: int) -> Tuple[int, int]:
        """(smallest g over candidates separating sets i and j, first candidate achieving it)."""
        L, R = self.in_left, self.in_right
        sep = (L[:, i] & R[:, j]) | (L[:, j] & R[:, i])
        if not sep.any():
            raise NoSeparatorError(f"no candidate line separates sets {i} and {j}")
        gs = np.where(sep, self.g, self.n + 1)
        best = int(gs.min())
        return best, int(np.argmax(gs == best))

    def minmax_all(self) -> Dict[Tuple[int, int], Tuple[int, int]]:
        """``minmax_pair`` for every pair i < j at once, sweeping g upwards."""
        n = self.n
        out: Dict[Tuple[int, int], Tuple[int, int]] = {}
        todo = np.triu(np.ones((n, n), dtype=bool), 1)
        for t in np.unique(self.g):
            if not todo.any():
                break
            rows = np.flatnonzero(self.g == t)
            L = self.in_left[rows]
            R = self.in_right[rows]
            hits = L.T.astype(np.float32) @ R.astype(np.float32)
            newly = ((hits + hits.T) > 0) & todo
            for i, j in zip(*np.nonzero(newly)):
                mask = (L[:, i] & R[:, j]) | (L[:, j] & R[:, i])
                out[(int(i), int(j))] = (int(t), int(rows[np.argmax(mask)]))
            todo &= ~newly
        if todo.any():
            i, j = (int(v) for v in np.argwhere(todo)[0])
            raise NoSeparatorError(f"no candidate line separates sets {i} and {j}")
        return out


def candidate_lines(sets: Sequence[ConvexPolygon]) -> List[DirectedLine]:
    """Every candidate line of the instance, deduplicated by canonical form."""
    fam = CandidateFamily(sets)
    seen = {}
    for cand in range(len(fam)):
        line = fam.line(cand)
        seen.setdefault(line, None)
    return list(seen)
