"""Brute-force depth oracles used to cross-check the depth engine.

These deliberately share nothing with :mod:`tukeydepth.depth` beyond the
:class:`PointSet` container: they work on Fraction coordinates, use their own
determinant and enumerate halfspaces straight from the definition.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations, product
from typing import Sequence

from .errors import InputError
from .geometry import PointSet


def _laplace_det(m: list[list[Fraction]]) -> Fraction:
    if len(m) == 1:
        return m[0][0]
    total = Fraction(0)
    for j, a in enumerate(m[0]):
        if a:
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            total += (-1) ** j * a * _laplace_det(minor)
    return total


def _half(v) -> int:
    x, y = v
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _angle_cmp(a, b) -> int:
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return ha - hb
    c = a[0] * b[1] - a[1] * b[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def _arc_representatives(events: list[tuple[Fraction, Fraction]]) -> list[tuple[Fraction, Fraction]]:
    """One direction strictly inside each open arc between sorted event directions."""
    uniq: list[tuple[Fraction, Fraction]] = []
    for e in sorted(events, key=cmp_to_key(_angle_cmp)):
        if not uniq or _angle_cmp(uniq[-1], e) != 0:
            uniq.append(e)
    if len(uniq) > 1 and _angle_cmp(uniq[0], uniq[-1]) == 0:
        uniq.pop()
    if not uniq:
        return [(Fraction(1), Fraction(0))]
    reps = []
    for a, b in zip(uniq, uniq[1:] + uniq[:1]):
        cross = a[0] * b[1] - a[1] * b[0]
        if cross > 0 and len(uniq) > 1:
            r = (a[0] + b[0], a[1] + b[1])
            # strictly between a and b in counterclockwise order
            assert a[0] * r[1] - a[1] * r[0] > 0 and r[0] * b[1] - r[1] * b[0] > 0
        else:
            # arc of length >= pi: rotate a by a quarter turn
            r = (-a[1], a[0])
        reps.append(r)
    return reps


def sweep_depth_oracle_2d(P: PointSet, query, mode: str = "affine") -> int:
    """Depth by exhaustive circular sweep over all direction events in the plane.

    ``query`` is a point index or a sequence of one or two indices.
    """
    if P.dim != 2:
        raise InputError("the sweep oracle is planar only")
    idx = (query,) if isinstance(query, int) else tuple(sorted(query))
    if not 1 <= len(idx) <= 2 or len(set(idx)) != len(idx):
        raise InputError(f"bad query {query!r}")
    for i in idx:
        P.check_index(i)
    pts = list(P.points)
    Q = [pts[i] for i in idx]

    def closed_count(v, level) -> int:
        return sum(1 for p in pts if v[0] * p[0] + v[1] * p[1] >= level)

    if len(idx) == 2 and mode == "affine":
        # halfspaces containing a line: only the two normals of that line
        (ax, ay), (bx, by) = Q
        best = len(pts)
        for v in ((ay - by, bx - ax), (by - ay, ax - bx)):
            best = min(best, closed_count(v, v[0] * ax + v[1] * ay))
        return best
    if mode not in ("affine", "convex"):
        raise InputError(f"unknown mode {mode!r}")
    events = []
    for p, r in combinations(pts, 2):
        dx, dy = p[0] - r[0], p[1] - r[1]
        events.append((-dy, dx))
        events.append((dy, -dx))
    best = len(pts)
    for v in _arc_representatives(events):
        # {<v, x> >= level} contains Q iff level <= min over Q
        level = min(v[0] * q[0] + v[1] * q[1] for q in Q)
        best = min(best, closed_count(v, level))
    return best


def hyperplane_depth_oracle(P: PointSet, query, mode: str = "affine") -> int:
    """Depth from every hyperplane spanned by ``d`` points of ``P``.

    An optimal closed halfspace can be rotated until its boundary holds ``d``
    points ``T`` (general position).  Tilting the boundary then moves each
    point of ``T`` to either side independently.  For affine depth ``T`` must
    contain the query set; for convex depth ``T`` must meet it and the rest of
    the query set must lie strictly on the kept side.
    """
    idx = (query,) if isinstance(query, int) else tuple(sorted(set(query)))
    for i in idx:
        P.check_index(i)
    if mode not in ("affine", "convex"):
        raise InputError(f"unknown mode {mode!r}")
    d = P.dim
    n = len(P)
    Qs = set(idx)
    if n <= d:
        return len(Qs)
    best = n
    for T in combinations(range(n), d):
        inside = Qs.intersection(T)
        if not inside or (mode == "affine" and len(inside) != len(Qs)):
            continue
        base = P[T[0]]
        rows = [[a - b for a, b in zip(P[t], base)] for t in T[1:]]
        side = {}
        for i in range(n):
            if i not in T:
                side[i] = _laplace_det(rows + [[a - b for a, b in zip(P[i], base)]])
        for s in (1, -1):
            if any(side[i] * s < 0 for i in Qs - inside):
                continue
            strict = sum(1 for x in side.values() if x * s > 0)
            best = min(best, strict + len(inside))
    return best


def j_edge_histogram(P: PointSet) -> list[int]:
    """``e[j]`` = number of directed edges ``(a, b)`` with exactly ``j`` points to their right.

    Planar only.  The undirected segment ``ab`` then has affine depth
    ``2 + min(j, n - 2 - j)``.
    """
    if P.dim != 2:
        raise InputError("j-edges are computed for planar sets only")
    n = len(P)
    e = [0] * max(n - 1, 1)
    for a, b in product(range(n), repeat=2):
        if a == b:
            continue
        (ax, ay), (bx, by) = P[a], P[b]
        right = sum(
            1
            for i, (px, py) in enumerate(P.points)
            if i not in (a, b) and (bx - ax) * (py - ay) - (by - ay) * (px - ax) < 0
        )
        e[right] += 1
    return e


def brute_point_depths(P: PointSet) -> list[int]:
    if P.dim == 2:
        return [sweep_depth_oracle_2d(P, i) for i in range(len(P))]
    return [hyperplane_depth_oracle(P, i) for i in range(len(P))]


def affine_depth_from_j(j: int, n: int) -> int:
    return 2 + min(j, n - 2 - j)
