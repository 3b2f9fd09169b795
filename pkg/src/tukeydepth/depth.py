"""Exact Tukey depth of points, multiset points and flats.

Every depth here is a minimum over closed halfspaces.  Writing the halfspace
with outer normal ``v``, the count of points *outside* it is the number of
constraints ``<v, u> > 0`` satisfied, so

    depth = total - max_v #{items whose vectors all satisfy <v, u> > 0}.

:func:`max_open_count` evaluates that maximum exactly.  The optimum is
attained on an open cell of the central arrangement of the vectors, and every
open cell touches an extreme ray orthogonal to ``m - 1`` independent
vectors.  At such a ray the constraints that are tight are resolved by
recursing into the orthogonal complement of the ray (a lexicographic
perturbation), so no tie ever has to be guessed.

Point depth in general position uses the cheaper counting formula: one plus
the smallest strict side count of a hyperplane through ``q`` and ``d - 1``
other points.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Literal, Sequence

from .errors import DegeneracyError, InputError
from .geometry import Point, PointSet, _orient_int, as_point, require_general_position
from .linalg import (
    clear_denominators,
    dot,
    generalized_cross,
    independent_subset,
    line_key,
    nullspace_int,
    perp_basis,
    rank,
    sub,
)

Mode = Literal["affine", "convex"]
Item = tuple[int, list[tuple[int, ...]]]


@dataclass(frozen=True)
class FlatSpec:
    """``k + 1`` point indices spanning a ``k``-flat."""

    indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(sorted(self.indices))
        if not idx or len(set(idx)) != len(idx):
            raise InputError(f"flat needs distinct indices, got {self.indices!r}")
        object.__setattr__(self, "indices", idx)

    @property
    def k(self) -> int:
        return len(self.indices) - 1


@dataclass(frozen=True)
class MultisetPoint:
    point: Point
    multiplicity: int = 1

    def __post_init__(self):
        object.__setattr__(self, "point", as_point(self.point))
        if not isinstance(self.multiplicity, int) or self.multiplicity < 1:
            raise InputError("multiplicity must be a positive integer")


@dataclass(frozen=True)
class DepthHistogram:
    """Entry ``i`` (1-indexed) counts the ``(k+1)``-subsets of depth ``i``."""

    entries: tuple[int, ...]
    k: int
    d: int
    mode: Mode = "affine"
    n: int | None = field(default=None, compare=False)

    def __post_init__(self):
        entries = list(self.entries)
        if any(e < 0 for e in entries):
            raise InputError("histogram entries must be nonnegative")
        while entries and entries[-1] == 0:
            entries.pop()
        object.__setattr__(self, "entries", tuple(entries))

    def __getitem__(self, depth: int) -> int:
        """Number of objects at ``depth`` (1-indexed; 0 past the end)."""
        if depth < 1:
            raise IndexError("depths start at 1")
        return self.entries[depth - 1] if depth <= len(self.entries) else 0

    def as_list(self) -> list[int]:
        return list(self.entries)

    @property
    def max_depth(self) -> int:
        return len(self.entries)


# --------------------------------------------------------------------------
# exact kernel


def _restrict_to_span(items: list[Item], dim: int) -> tuple[list[Item], int]:
    vecs = list({u for _, us in items for u in us})
    basis = [vecs[i] for i in independent_subset(vecs)]
    if len(basis) == dim:
        return items, dim
    return [(w, [tuple(dot(b, u) for b in basis) for u in us]) for w, us in items], len(basis)


def max_open_count(items: list[Item], dim: int) -> int:
    """Largest total weight of items simultaneously satisfiable by one direction.

    ``items`` is a list of ``(weight, vectors)``; an item is satisfied by ``v``
    when ``<v, u> > 0`` for all of its (nonzero, integer) vectors.
    """
    items = [(w, us) for w, us in items if w and us]
    if not items:
        return 0
    if any(not any(u) for _, us in items for u in us):
        raise InputError("zero vector in a strict constraint")
    items, dim = _restrict_to_span(items, dim)
    total = sum(w for w, _ in items)
    if dim == 1:
        pos = sum(w for w, us in items if all(u[0] > 0 for u in us))
        neg = sum(w for w, us in items if all(u[0] < 0 for u in us))
        return max(pos, neg)
    lines = sorted({line_key(u) for _, us in items for u in us})
    best = 0
    for combo in combinations(lines, dim - 1):
        normal = generalized_cross(combo)
        if not any(normal):
            continue
        for v in (normal, tuple(-x for x in normal)):
            count = 0
            tied: list[Item] = []
            for w, us in items:
                vals = [dot(v, u) for u in us]
                if any(x < 0 for x in vals):
                    continue
                zeros = [u for u, x in zip(us, vals) if x == 0]
                if zeros:
                    tied.append((w, zeros))
                else:
                    count += w
            if tied:
                basis = perp_basis(v)
                lowered = [(w, [tuple(dot(b, u) for b in basis) for u in zs]) for w, zs in tied]
                count += max_open_count(lowered, dim - 1)
            if count > best:
                best = count
                if best == total:
                    return best
    return best


# --------------------------------------------------------------------------
# point depth


def tukey_depth(P: PointSet, q_index: int) -> int:
    """Tukey depth of ``P[q_index]`` with respect to ``P`` (general position)."""
    P.check_index(q_index)
    require_general_position(P)
    return _tukey_depth_gp(P, q_index)


def _tukey_depth_gp(P: PointSet, q: int) -> int:
    d = P.dim
    n = len(P)
    if n <= d:
        return 1
    ip = P.int_points
    qp = ip[q]
    others = [ip[i] for i in range(n) if i != q]
    best = n
    if d == 2:
        qx, qy = qp
        rel = [(x - qx, y - qy) for x, y in others]
        for sx, sy in rel:
            above = below = 0
            for px, py in rel:
                c = sx * py - sy * px
                if c > 0:
                    above += 1
                elif c < 0:
                    below += 1
            m = above if above < below else below
            if m < best:
                best = m
                if best == 0:
                    break
        return 1 + best
    for S in combinations(range(len(others)), d - 1):
        rows = [sub(others[s], qp) for s in S]
        normal = generalized_cross(rows)
        above = below = 0
        for i, p in enumerate(others):
            if i in S:
                continue
            c = dot(normal, sub(p, qp))
            if c > 0:
                above += 1
            elif c < 0:
                below += 1
        best = min(best, above, below)
        if best == 0:
            break
    return 1 + best


def tukey_depth_multiset(M: Sequence[MultisetPoint], q: Sequence) -> int:
    """Depth of location ``q`` in a weighted point multiset.

    No general-position assumption: coincident locations and points collinear
    with ``q`` are handled exactly by the kernel.
    """
    M = [m if isinstance(m, MultisetPoint) else MultisetPoint(*m) for m in M]
    if not M:
        raise InputError("empty multiset")
    q = as_point(q)
    dim = len(q)
    if dim < 1 or any(len(m.point) != dim for m in M):
        raise InputError("dimension mismatch in multiset")
    if not any(m.point == q for m in M):
        raise InputError("query location is not an element of the multiset")
    total = sum(m.multiplicity for m in M)
    items = []
    for m in M:
        if m.point != q:
            items.append((m.multiplicity, [clear_denominators(sub(m.point, q))]))
    return total - max_open_count(items, dim)


# --------------------------------------------------------------------------
# flat depth


def _flat(P: PointSet, Q) -> FlatSpec:
    Q = Q if isinstance(Q, FlatSpec) else FlatSpec(tuple(Q))
    for i in Q.indices:
        P.check_index(i)
    if Q.k >= P.dim:
        raise InputError(f"a flat in R^{P.dim} is spanned by at most {P.dim} points")
    ip = P.int_points
    dirs = [sub(ip[i], ip[Q.indices[0]]) for i in Q.indices[1:]]
    if rank(dirs) != Q.k:
        raise DegeneracyError(f"points {Q.indices} are affinely dependent")
    return Q


def complement_image(P: PointSet, Q) -> tuple[list[MultisetPoint], Point]:
    """Image of ``P`` in coordinates of the orthogonal complement of ``aff(Q)``.

    The coordinates are ``B^T (p - q0)`` for an integer basis ``B`` of the
    complement; this is an invertible linear image of the orthogonal
    projection, so it preserves every halfspace count.  The spanning points
    collapse to the origin with multiplicity ``k + 1``.
    """
    Q = _flat(P, Q)
    ip = P.int_points
    q0 = ip[Q.indices[0]]
    dirs = [sub(ip[i], q0) for i in Q.indices[1:]]
    basis = nullspace_int(dirs) if dirs else [
        tuple(int(i == j) for j in range(P.dim)) for i in range(P.dim)
    ]
    counts: dict[tuple[int, ...], int] = {}
    for p in ip:
        img = tuple(dot(b, sub(p, q0)) for b in basis)
        counts[img] = counts.get(img, 0) + 1
    origin = tuple(0 for _ in basis)
    return [MultisetPoint(loc, m) for loc, m in counts.items()], as_point(origin)


def affine_depth(P: PointSet, Q) -> int:
    """Minimum number of points of ``P`` in a closed halfspace containing ``aff(Q)``."""
    Q = _flat(P, Q)
    require_general_position(P)
    if Q.k == 0:
        return _tukey_depth_gp(P, Q.indices[0])
    M, origin = complement_image(P, Q)
    return tukey_depth_multiset(M, origin)


def convex_depth(P: PointSet, Q) -> int:
    """Minimum number of points of ``P`` in a closed halfspace containing ``conv(Q)``."""
    Q = _flat(P, Q)
    require_general_position(P)
    if Q.k == 0:
        return _tukey_depth_gp(P, Q.indices[0])
    ip = P.int_points
    qs = [ip[i] for i in Q.indices]
    items = [
        (1, [sub(p, q) for q in qs]) for i, p in enumerate(ip) if i not in Q.indices
    ]
    return len(P) - max_open_count(items, P.dim)


def flat_depth(P: PointSet, Q, mode: Mode = "affine") -> int:
    if mode == "affine":
        return affine_depth(P, Q)
    if mode == "convex":
        return convex_depth(P, Q)
    raise InputError(f"unknown mode {mode!r}")


def depth_histogram(P: PointSet, k: int = 0, mode: Mode = "affine") -> DepthHistogram:
    """Histogram of depths over all ``(k+1)``-subsets of ``P``."""
    if not isinstance(k, int) or not 0 <= k < P.dim:
        raise InputError(f"need 0 <= k < {P.dim}, got {k!r}")
    if mode not in ("affine", "convex"):
        raise InputError(f"unknown mode {mode!r}")
    require_general_position(P)
    counts: dict[int, int] = {}
    for Q in combinations(range(len(P)), k + 1):
        if k == 0:
            dep = _tukey_depth_gp(P, Q[0])
        else:
            dep = flat_depth(P, Q, mode)
        counts[dep] = counts.get(dep, 0) + 1
    top = max(counts, default=0)
    entries = tuple(counts.get(i, 0) for i in range(1, top + 1))
    assert sum(entries) == comb(len(P), k + 1)
    return DepthHistogram(entries, k, P.dim, mode, n=len(P))


def point_depths(P: PointSet) -> list[int]:
    require_general_position(P)
    return [_tukey_depth_gp(P, i) for i in range(len(P))]


def orientation_signs(P: PointSet) -> tuple[int, ...]:
    """The order type of ``P``: orientation of every ``(d+1)``-subset in index order."""
    ip = P.int_points
    return tuple(_orient_int([ip[i] for i in c]) for c in combinations(range(len(ip)), P.dim + 1))
