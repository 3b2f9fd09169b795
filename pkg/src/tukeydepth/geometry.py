"""Exact point sets, orientation predicates and general-position checks.

Coordinates are :class:`fractions.Fraction` values.  Predicates never touch
floating point: each point set caches an integer copy of its coordinates
(scaled by the common denominator, which preserves every orientation sign)
and all determinants are evaluated on that copy.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from functools import cached_property, reduce
from itertools import combinations
from math import lcm
from typing import Iterable, NamedTuple, Sequence

from .errors import DegeneracyError, InputError, RejectionLimitError
from .linalg import det_int, dot, generalized_cross, primitive, sign

Point = tuple[Fraction, ...]
Direction = tuple[int, ...]

REJECTION_LIMIT = 1000


def as_rational(x) -> Fraction:
    """Convert ``x`` to a Fraction without any loss of precision."""
    if isinstance(x, bool):
        raise InputError(f"not a number: {x!r}")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Decimal, float)):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational literal {x!r}") from exc
    raise InputError(f"cannot interpret {x!r} as a rational")


def as_point(coords: Iterable) -> Point:
    return tuple(as_rational(c) for c in coords)


def canonical_direction(vec: Sequence) -> Direction:
    """Clear denominators and divide by the gcd; the zero vector is rejected."""
    d = primitive([as_rational(x) for x in vec])
    if not any(d):
        raise InputError("direction must be nonzero")
    return d


@dataclass(frozen=True)
class PointSet:
    """An ordered tuple of pairwise distinct points in ``R^dim``."""

    dim: int
    points: tuple[Point, ...]

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise InputError(f"dimension must be a positive integer, got {self.dim!r}")
        pts = tuple(as_point(p) for p in self.points)
        for p in pts:
            if len(p) != self.dim:
                raise InputError(f"point {p} does not have dimension {self.dim}")
        if len(set(pts)) != len(pts):
            raise InputError("points must be pairwise distinct")
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_coords(cls, coords: Sequence[Sequence]) -> "PointSet":
        coords = list(coords)
        if not coords:
            raise InputError("cannot infer the dimension of an empty point set")
        return cls(len(coords[0]), tuple(coords))

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    @cached_property
    def int_points(self) -> tuple[tuple[int, ...], ...]:
        den = reduce(lcm, (c.denominator for p in self.points for c in p), 1)
        return tuple(tuple(int(c * den) for c in p) for p in self.points)

    @cached_property
    def general_position(self) -> bool:
        return is_general_position(self)

    def check_index(self, i: int) -> int:
        if not isinstance(i, int) or not 0 <= i < len(self.points):
            raise InputError(f"point index {i!r} out of range for {len(self.points)} points")
        return i

    def orient(self, indices: Sequence[int]) -> int:
        """Orientation sign of the simplex with the given point indices."""
        return _orient_int([self.int_points[i] for i in indices])

    def with_point(self, i: int, p: Sequence) -> "PointSet":
        pts = list(self.points)
        pts[i] = as_point(p)
        return PointSet(self.dim, tuple(pts))

    def appended(self, p: Sequence) -> "PointSet":
        return PointSet(self.dim, self.points + (as_point(p),))

    def without(self, i: int) -> "PointSet":
        return PointSet(self.dim, self.points[:i] + self.points[i + 1:])

    def translated(self, offset: Sequence) -> "PointSet":
        off = as_point(offset)
        return PointSet(self.dim, tuple(tuple(a - b for a, b in zip(p, off)) for p in self.points))


def _orient_int(pts: Sequence[Sequence[int]]) -> int:
    p0 = pts[0]
    d = len(p0)
    if d == 2:
        (ax, ay), (bx, by), (cx, cy) = pts
        return sign((bx - ax) * (cy - ay) - (by - ay) * (cx - ax))
    rows = [[a - b for a, b in zip(p, p0)] for p in pts[1:]]
    return sign(det_int(rows))


def orientation(simplex: Sequence[Sequence]) -> int:
    """Sign of ``det[p1 - p0, ..., pd - p0]`` for ``d + 1`` points in ``R^d``."""
    pts = [as_point(p) for p in simplex]
    if not pts:
        raise InputError("empty simplex")
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise InputError("dimension mismatch in simplex")
    if len(pts) != d + 1:
        raise InputError(f"need {d + 1} points in dimension {d}, got {len(pts)}")
    den = reduce(lcm, (c.denominator for p in pts for c in p), 1)
    return _orient_int([[int(c * den) for c in p] for p in pts])


class SidePartition(NamedTuple):
    below: frozenset[int]
    on: frozenset[int]
    above: frozenset[int]


def side_partition(P: PointSet, anchors: Sequence[int]) -> SidePartition:
    """Classify every point against the hyperplane spanned by ``anchors``.

    A point ``p`` is above when ``orient(anchors..., p) = +1``, so the order of
    the anchors fixes which side is "above".
    """
    d = P.dim
    anchors = [P.check_index(a) for a in anchors]
    if len(anchors) != d or len(set(anchors)) != d:
        raise InputError(f"need {d} distinct anchor indices")
    ip = P.int_points
    base = ip[anchors[0]]
    rows = [[a - b for a, b in zip(ip[i], base)] for i in anchors[1:]]
    normal = generalized_cross(rows)
    if not any(normal):
        raise DegeneracyError(f"anchors {anchors} do not span a hyperplane")
    # orient(anchors, p) = det[rows; p - base], a cofactor expansion along the last row
    sgn = (-1) ** (d - 1)
    below, on, above = set(), set(), set()
    for i, p in enumerate(ip):
        s = sign(dot(normal, [a - b for a, b in zip(p, base)])) * sgn
        (above if s > 0 else below if s < 0 else on).add(i)
    return SidePartition(frozenset(below), frozenset(on), frozenset(above))


def is_general_position(P: PointSet) -> bool:
    """True iff no ``d + 1`` points of ``P`` lie on a common hyperplane."""
    d = P.dim
    ip = P.int_points
    for combo in combinations(range(len(ip)), d + 1):
        if _orient_int([ip[i] for i in combo]) == 0:
            return False
    return True


def require_general_position(P: PointSet) -> None:
    if not P.general_position:
        raise DegeneracyError("point set is not in general position")


def _extends_general_position(ip: list[tuple[int, ...]], new: tuple[int, ...], d: int) -> bool:
    if new in ip:
        return False
    for combo in combinations(ip, d):
        if _orient_int(list(combo) + [new]) == 0:
            return False
    return True


def random_point_set(n: int, d: int, seed: int = 0, coord_bound: int = 100) -> PointSet:
    """Seeded integer point set in ``[-coord_bound, coord_bound]^d`` in general position.

    Points are drawn one at a time; a draw that would break general position
    is resampled.  :class:`RejectionLimitError` is raised after
    ``REJECTION_LIMIT`` consecutive failed draws.
    """
    if n < 1 or d < 1:
        raise InputError("need n >= 1 and d >= 1")
    if coord_bound < 0:
        raise InputError("coord_bound must be nonnegative")
    rng = random.Random(seed)
    pts: list[tuple[int, ...]] = []
    while len(pts) < n:
        for _ in range(REJECTION_LIMIT):
            cand = tuple(rng.randint(-coord_bound, coord_bound) for _ in range(d))
            if _extends_general_position(pts, cand, d):
                pts.append(cand)
                break
        else:
            raise RejectionLimitError(
                f"{REJECTION_LIMIT} consecutive draws failed at point {len(pts) + 1} of {n}"
            )
    return PointSet(d, tuple(pts))
