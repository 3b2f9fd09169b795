"""Construct point sets with a prescribed point-depth histogram.

The construction keeps every intermediate set balanced around the origin.
A set is *symmetric* when each hyperplane through the origin and ``d - 1`` of
its points splits the remaining points evenly, and *eccentric* when each such
split is off by exactly one.  A new point inserted at the origin of a
balanced set is strictly deepest, so it can be pushed outward along a ray
until its depth drops to the desired value without disturbing anybody else.
Pushing along a well-chosen ray turns a symmetric set into an eccentric one
and vice versa, which is what keeps the loop going.

All arithmetic is exact.  Directions are found constructively and then
verified by classification, so a bad guess costs a retry and never a wrong
answer.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cmp_to_key, reduce
from itertools import combinations
from math import lcm
from typing import Sequence

from .depth import _tukey_depth_gp, depth_histogram, point_depths
from .errors import DegeneracyError, InputError, RealizationFailed
from .geometry import (
    Direction,
    Point,
    PointSet,
    as_point,
    canonical_direction,
    require_general_position,
)
from .histograms import canonical, validate_point_histogram
from .linalg import (
    cell_representatives,
    clear_denominators,
    det_int,
    dot,
    generalized_cross,
    orthogonal_basis,
    primitive,
    sign,
    sign_vector,
    solve,
    sub,
)

PERTURB_LIMIT = 50
DIRECTION_ATTEMPTS = 25
REALIZE_ATTEMPTS = 4
SPHERE_BITS = 12


class ConfigKind(Enum):
    SYMMETRIC = "Symmetric"
    ECCENTRIC = "Eccentric"
    NEITHER = "Neither"


@dataclass(frozen=True)
class PushEvent:
    """The moving point crossed the hyperplane spanned by ``crossed`` at time ``t``."""

    t: Fraction
    crossed: tuple[int, ...]
    through_convex_hull: bool
    depth_before: int
    depth_after: int

    @property
    def delta(self) -> int:
        return self.depth_after - self.depth_before


@dataclass(frozen=True)
class RealizationStep:
    point: Point
    target_depth: int
    direction: Direction
    events: tuple[PushEvent, ...]
    t: Fraction
    central_depth: int
    state: ConfigKind
    method: str


@dataclass
class RealizationTrace:
    dim: int
    initial: PointSet
    steps: list[RealizationStep] = field(default_factory=list)
    final: PointSet | None = None
    seed: int = 0

    def replay(self) -> PointSet:
        P = self.initial
        for step in self.steps:
            P = P.appended(step.point)
        return P

    @property
    def events(self) -> list[PushEvent]:
        return [e for s in self.steps for e in s.events]

    def report(self) -> str:
        lines = [f"realization in R^{self.dim}, seed {self.seed}"]
        lines.append(f"initial simplex: {len(self.initial)} points")
        for n, s in enumerate(self.steps, start=len(self.initial) + 1):
            coords = ", ".join(str(c) for c in s.point)
            lines.append(
                f"point {n}: target {s.target_depth}, central depth {s.central_depth}, "
                f"state {s.state.value}, direction {list(s.direction)} ({s.method}), "
                f"t = {s.t}, {len(s.events)} events -> ({coords})"
            )
            for e in s.events:
                hull = "through hull" if e.through_convex_hull else "outside hull"
                lines.append(
                    f"    t = {e.t}: crossed {list(e.crossed)}, {hull}, "
                    f"depth {e.depth_before} -> {e.depth_after}"
                )
        return "\n".join(lines)


# --------------------------------------------------------------------------
# classification


def _classify_vectors(vecs: Sequence[Sequence[int]], d: int) -> ConfigKind | None:
    """Classify integer vectors around the origin; ``None`` if not in general position."""
    N = len(vecs)
    remaining = N - (d - 1)
    if remaining < 0:
        return None
    worst = 0
    for S in combinations(range(N), d - 1):
        if d == 2:
            sx, sy = vecs[S[0]]
            normal = (-sy, sx)
        else:
            normal = generalized_cross([vecs[s] for s in S])
        if not any(normal):
            return None
        bal = 0
        for i, v in enumerate(vecs):
            if i in S:
                continue
            x = dot(normal, v)
            if x == 0:
                return None
            bal += 1 if x > 0 else -1
        worst = max(worst, abs(bal))
        if worst > 1:
            return ConfigKind.NEITHER
    if worst == 0:
        return ConfigKind.SYMMETRIC
    return ConfigKind.ECCENTRIC


def _relative_vectors(P: PointSet, c: int) -> list[tuple[int, ...]]:
    ip = P.int_points
    return [sub(p, ip[c]) for i, p in enumerate(ip) if i != c]


def classify_configuration(P: PointSet, center_index: int) -> ConfigKind:
    """Symmetric, eccentric or neither, judged around ``P[center_index]``."""
    P.check_index(center_index)
    if len(P) < P.dim:
        raise InputError(f"need at least {P.dim} points")
    require_general_position(P)
    kind = _classify_vectors(_relative_vectors(P, center_index), P.dim)
    if kind is None:
        raise DegeneracyError("hyperplane through the center holds too many points")
    return kind


# --------------------------------------------------------------------------
# spherical sets and stereographic projection


def _approx_sqrt(x: Fraction, bits: int = SPHERE_BITS) -> Fraction:
    """Exact square root when ``x`` is a rational square, else a close dyadic lower bound."""
    n, m = x.numerator, x.denominator
    rn, rm = math.isqrt(n), math.isqrt(m)
    if rn * rn == n and rm * rm == m:
        return Fraction(rn, rm)
    scale = 1 << bits
    return Fraction(math.isqrt(n * m * scale * scale), m * scale)


def induced_spherical(P: PointSet, center_index: int, radius=1) -> PointSet:
    """Move every point along its ray from the center to (about) a common sphere.

    Rays from the center are kept exactly; lengths are normalized to
    ``radius`` up to a dyadic approximation of the square root, which changes
    no side count of a hyperplane through the center.
    """
    P.check_index(center_index)
    c = P[center_index]
    R = as_point([radius])[0]
    if R <= 0:
        raise InputError("radius must be positive")
    out = []
    for i, p in enumerate(P):
        if i == center_index:
            out.append(p)
            continue
        x = sub(p, c)
        norm = _approx_sqrt(dot(x, x))
        out.append(tuple(ci + R * xi / norm for ci, xi in zip(c, x)))
    return PointSet(P.dim, tuple(out))


def _complement_basis(north: Sequence) -> list[tuple[Fraction, ...]]:
    d = len(north)
    units = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    return orthogonal_basis([north] + units)[1:]


def stereographic_to_lower(P_spherical: PointSet, pole_pair) -> PointSet:
    """Project points on a sphere around the origin to ``R^(d-1)``.

    ``pole_pair`` is the north pole, or a ``(north, south)`` pair with
    ``south = -north``.  The projection is taken from the south pole so the
    north pole lands on the origin; image coordinates refer to a rational
    orthogonal basis of the complement of the polar axis.  Every image is a
    positive multiple of the component orthogonal to the axis, so a line
    (hyperplane) through the origin and some images corresponds to the
    hyperplane through both poles and the matching sphere points.
    """
    if len(pole_pair) == 2 and not isinstance(pole_pair[0], (int, Fraction, str, float)):
        north, south = (as_point(x) for x in pole_pair)
        if any(a != -b for a, b in zip(north, south)):
            raise InputError("poles must be antipodal through the origin")
    else:
        north = as_point(pole_pair)
    d = P_spherical.dim
    if d < 2 or len(north) != d or not any(north):
        raise InputError("pole must be a nonzero vector of the ambient dimension")
    basis = _complement_basis(north)
    nn = _approx_sqrt(dot(north, north))
    out = []
    for x in P_spherical:
        perp = [dot(x, b) / dot(b, b) for b in basis]
        rho = _approx_sqrt(dot(x, x))
        denom = rho + dot(x, north) / nn
        if denom <= 0:
            raise DegeneracyError(f"point {x} is too close to the projection pole")
        s = rho / denom
        out.append(tuple(s * y for y in perp))
    return PointSet(d - 1, tuple(out))


# --------------------------------------------------------------------------
# direction finding


def _angle_cmp(a, b) -> int:
    ha = 0 if (a[1] > 0 or (a[1] == 0 and a[0] > 0)) else 1
    hb = 0 if (b[1] > 0 or (b[1] == 0 and b[0] > 0)) else 1
    if ha != hb:
        return ha - hb
    c = a[0] * b[1] - a[1] * b[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def _rays_2d(vecs):
    rays = [(tuple(v), True) for v in vecs] + [(tuple(-x for x in v), False) for v in vecs]
    return sorted(rays, key=cmp_to_key(lambda a, b: _angle_cmp(a[0], b[0])))


def _arrangement(vecs: Sequence[Sequence[int]], d: int) -> list[tuple[int, ...]]:
    """Normals of all hyperplanes through the origin and ``d - 1`` of the vectors."""
    out = set()
    for S in combinations(vecs, d - 1):
        nrm = generalized_cross(S)
        if any(nrm):
            out.add(primitive(nrm))
    return sorted(out)


def _shorten(v: Sequence[int], normals) -> tuple[int, ...]:
    """Smallest halving of ``v`` (with rounding) that stays in the same open cell."""
    v = tuple(v)
    target = sign_vector(normals, v)
    best = v
    k = 1
    while True:
        cand = tuple(round(Fraction(x, 1 << k)) for x in v)
        if not any(cand):
            break
        if sign_vector(normals, cand) == target and 0 not in target:
            best = primitive(cand)
        elif k > 2 and max(abs(x) for x in cand) < 4:
            break
        k += 1
        if k > 200:
            break
    return best


def _generic_direction_2d(vecs, rng: random.Random) -> tuple[int, ...]:
    rays = _rays_2d(vecs)
    g = rng.randrange(len(rays))
    a, b = rays[g][0], rays[(g + 1) % len(rays)][0]
    return primitive((a[0] + b[0], a[1] + b[1]))


def _repair_gap_2d(vecs, rng: random.Random) -> tuple[int, ...] | None:
    """Opposite halfline of two angular neighbours not separated by a central line."""
    rays = _rays_2d(vecs)
    cands = []
    for i in range(len(rays)):
        (a, pa), (b, pb) = rays[i], rays[(i + 1) % len(rays)]
        if pa and pb:
            cands.append(primitive((-(a[0] + b[0]), -(a[1] + b[1]))))
    rng.shuffle(cands)
    for w in cands:
        if _classify_vectors(list(vecs) + [w], 2) is ConfigKind.SYMMETRIC:
            return w
    return None


def _repair_cells(vecs, d: int, rng: random.Random) -> tuple[int, ...] | None:
    """Scan every cell of the central arrangement for a direction restoring symmetry."""
    normals = _arrangement(vecs, d)
    cells = cell_representatives(normals, d)
    rng.shuffle(cells)
    for w in cells:
        if _classify_vectors(list(vecs) + [w], d) is ConfigKind.SYMMETRIC:
            return w
    return None


def _repair(vecs, d: int, rng: random.Random) -> tuple[tuple[int, ...] | None, str]:
    if d == 2:
        w = _repair_gap_2d(vecs, rng)
        if w is not None:
            return w, "gap"
    return _repair_cells(vecs, d, rng), "cell-search"


def _random_vector(d: int, rng: random.Random, bound: int = 12) -> tuple[int, ...]:
    while True:
        v = tuple(rng.randint(-bound, bound) for _ in range(d))
        if any(v):
            return primitive(v)


def _stereographic_pair(vecs, d: int, rng: random.Random):
    """Directions from a random polar axis and a repair one dimension lower."""
    u = _random_vector(d, rng)
    v1 = tuple(-x for x in u)
    if _classify_vectors(list(vecs) + [v1], d) is not ConfigKind.ECCENTRIC:
        return None
    origin = (0,) * d
    base = PointSet(d, (origin,) + tuple(tuple(v) for v in vecs))
    sphere = induced_spherical(base, 0)
    try:
        lower = stereographic_to_lower(sphere.without(0), u)
    except (DegeneracyError, InputError):
        return None
    # positive rescaling of each image keeps every side count around the origin
    qvecs = [clear_denominators(q) for q in lower]
    if _classify_vectors(qvecs, d - 1) is not ConfigKind.ECCENTRIC:
        return None
    w, _ = _repair(qvecs, d - 1, rng)
    if w is None:
        return None
    basis = _complement_basis(u)
    lift = [sum(wj * b[i] for wj, b in zip(w, basis)) for i in range(d)]
    eps = Fraction(1)
    for _ in range(40):
        v2 = primitive([ui + eps * zi for ui, zi in zip(u, lift)])
        if _classify_vectors(list(vecs) + [v1, v2], d) is ConfigKind.SYMMETRIC:
            return v1, v2
        eps /= 2
    return None


def _cell_pair(vecs, d: int, rng: random.Random):
    cells = cell_representatives(_arrangement(vecs, d), d)
    rng.shuffle(cells)
    for v1 in cells:
        if _classify_vectors(list(vecs) + [v1], d) is not ConfigKind.ECCENTRIC:
            continue
        v2 = _repair_cells(list(vecs) + [v1], d, rng)
        if v2 is not None:
            return v1, v2
    return None


def _pair_directions(vecs, d: int, rng: random.Random):
    """``(v1, v2, method)`` for a symmetric configuration of integer vectors."""
    vecs = [tuple(v) for v in vecs]
    if d == 2:
        for _ in range(DIRECTION_ATTEMPTS):
            v1 = _generic_direction_2d(vecs, rng)
            if _classify_vectors(vecs + [v1], 2) is not ConfigKind.ECCENTRIC:
                continue
            v2, method = _repair(vecs + [v1], 2, rng)
            if v2 is not None:
                return v1, v2, method
    else:
        for _ in range(DIRECTION_ATTEMPTS):
            pair = _stereographic_pair(vecs, d, rng)
            if pair is not None:
                return pair[0], pair[1], "stereographic"
        pair = _cell_pair(vecs, d, rng)
        if pair is not None:
            return pair[0], pair[1], "cell-search"
    raise RealizationFailed("no pair of push directions passed verification")


def find_push_directions(P: PointSet, center_index: int, seed: int = 0) -> tuple[Direction, Direction]:
    """Two directions: pushing along the first leaves an eccentric set, the second restores symmetry."""
    if classify_configuration(P, center_index) is not ConfigKind.SYMMETRIC:
        raise InputError("push directions are defined for symmetric configurations")
    vecs = _relative_vectors(P, center_index)
    v1, v2, _ = _pair_directions(vecs, P.dim, random.Random(seed))
    normals = _arrangement(vecs, P.dim)
    v1 = _shorten(v1, normals)
    if _classify_vectors(vecs + [v1, v2], P.dim) is not ConfigKind.SYMMETRIC:
        v2, _ = _repair(vecs + [v1], P.dim, random.Random(seed))
        if v2 is None:
            raise RealizationFailed("no direction restores symmetry")
    v2 = _shorten(v2, _arrangement(vecs + [v1], P.dim))
    return v1, v2


# --------------------------------------------------------------------------
# pushing


def simplest_between(lo: Fraction, hi: Fraction | None) -> Fraction:
    """The rational with the smallest denominator strictly inside ``(lo, hi)``."""
    lo = Fraction(lo)
    fl = math.floor(lo)
    if hi is None or fl + 1 < hi:
        return Fraction(fl + 1)
    hi = Fraction(hi)
    if lo == fl:
        return fl + Fraction(1, math.floor(1 / (hi - fl)) + 1)
    return fl + 1 / simplest_between(1 / (hi - fl), 1 / (lo - fl))


def _cell_signs(rel: list[tuple[int, ...]], v: Sequence[int], d: int) -> tuple[int, ...]:
    return tuple(sign(det_int([*S, v])) for S in combinations(rel, d - 1))


def _crossings(ip, m: int, start, V, den: int, d: int):
    """Exact crossing times of ``start + t v`` through hyperplanes of other points."""
    others = [i for i in range(len(ip)) if i != m]
    out = []
    for S in combinations(others, d):
        s0 = ip[S[0]]
        rows = [sub(ip[s], s0) for s in S[1:]]
        a = det_int(rows + [sub(start, s0)])
        b = det_int(rows + [V])
        if b == 0:
            continue
        t = Fraction(-a, b * den)
        if t > 0:
            out.append((t, S))
    return out


def _through_hull(P: PointSet, S: Sequence[int], x: Point) -> bool:
    d = P.dim
    rows = [[P[s][c] for s in S] for c in range(d)] + [[1] * d]
    lam = solve(rows, list(x) + [1])
    if lam is None:
        raise DegeneracyError("crossing point is not on the crossed hyperplane")
    return all(l >= 0 for l in lam)


def push_to_depth(
    P: PointSet,
    moving_index: int,
    v: Sequence,
    target_depth: int,
    seed: int = 0,
) -> tuple[PointSet, list[PushEvent]]:
    """Move ``P[moving_index]`` along ``v`` until its depth equals ``target_depth``.

    The point must be at least as deep as every other point.  Crossings are
    processed one at a time; coinciding crossing times trigger a small seeded
    perturbation of ``v`` that keeps it in the same cell of the hyperplanes
    through the starting point.  The point is left at the simplest rational
    parameter inside the first interval where the target depth holds.
    """
    P.check_index(moving_index)
    require_general_position(P)
    v = canonical_direction(v)
    if len(v) != P.dim:
        raise InputError("direction has the wrong dimension")
    d, m = P.dim, moving_index
    depths = point_depths(P)
    cur = depths[m]
    if any(depths[i] > cur for i in range(len(P)) if i != m):
        raise InputError("the moving point must be a deepest point")
    if not isinstance(target_depth, int) or not 1 <= target_depth <= cur:
        raise InputError(f"target depth must lie in 1..{cur}")

    ip = P.int_points
    den = reduce(lcm, (c.denominator for p in P.points for c in p), 1)
    start_int = ip[m]
    start = P[m]
    rel = [sub(ip[i], start_int) for i in range(len(ip)) if i != m]
    cell = _cell_signs(rel, v, d)
    rng = random.Random(seed)
    for attempt in range(PERTURB_LIMIT):
        events = sorted(_crossings(ip, m, start_int, v, den, d))
        times = [t for t, _ in events]
        if len(set(times)) == len(times):
            break
        scale = 1 << (attempt + 4)
        cand = primitive([scale * x + rng.randint(-1, 1) for x in v])
        if any(cand) and _cell_signs(rel, cand, d) == cell:
            v = cand
    else:
        raise RealizationFailed("could not separate simultaneous crossings")

    others = [i for i in range(len(P)) if i != m]

    def place(t: Fraction) -> PointSet:
        return P.with_point(m, tuple(s + t * x for s, x in zip(start, v)))

    log: list[PushEvent] = []
    if cur == target_depth:
        hi = times[0] if times else None
        return place(simplest_between(Fraction(0), hi)), log
    prev = cur
    for k, (t, S) in enumerate(events):
        hi = times[k + 1] if k + 1 < len(times) else None
        Q = place(simplest_between(t, hi))
        dep = _tukey_depth_gp(Q, m)
        hit = tuple(s + t * x for s, x in zip(start, v))
        log.append(PushEvent(t, tuple(S), _through_hull(P, S, hit), prev, dep))
        if any(_tukey_depth_gp(Q, i) != depths[i] for i in others):
            raise RealizationFailed("a non-moving point changed depth", trace=log)
        prev = dep
        if dep == target_depth:
            return Q, log
    raise RealizationFailed("the target depth was never reached", trace=log)


# --------------------------------------------------------------------------
# realization


def initial_simplex(d: int) -> PointSet:
    """The unit vectors and ``-(1, ..., 1)``: a simplex centered at the origin."""
    pts = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    pts.append(tuple(-1 for _ in range(d)))
    return PointSet(d, tuple(pts))


def rational_regular_polygon(m: int, denominator_limit: int = 10**6) -> list[Point]:
    """Rational points on the unit circle close to a regular ``m``-gon."""
    if m < 3:
        raise InputError("a polygon needs at least 3 vertices")
    out = []
    for k in range(m):
        theta = 2 * math.pi * k / m
        if abs(math.cos(theta / 2)) < 1e-12:
            out.append((Fraction(-1), Fraction(0)))
            continue
        s = Fraction(math.tan(theta / 2)).limit_denominator(denominator_limit)
        out.append(((1 - s * s) / (1 + s * s), 2 * s / (1 + s * s)))
    return out


def _integer_rays(points: Sequence[Point]) -> list[tuple[int, ...]]:
    return [primitive(p) for p in points]


def _targets(entries: Sequence[int], d: int) -> list[int]:
    out = []
    for depth, count in enumerate(entries, start=1):
        out.extend([depth] * count)
    return out[d + 1:]


def _realize_once(entries: tuple[int, ...], d: int, seed: int) -> tuple[PointSet, RealizationTrace]:
    rng = random.Random(seed)
    P = initial_simplex(d)
    trace = RealizationTrace(d, P, seed=seed)
    pending: tuple[int, ...] | None = None
    origin = (0,) * d
    for target in _targets(entries, d):
        rays = _integer_rays(P.points)
        kind = _classify_vectors(rays, d)
        if kind is ConfigKind.SYMMETRIC:
            v, pending, method = _pair_directions(rays, d, rng)
            v = _shorten(v, _arrangement(rays, d))
        elif kind is ConfigKind.ECCENTRIC:
            v = pending
            method = "paired"
            if v is None or _classify_vectors(rays + [v], d) is not ConfigKind.SYMMETRIC:
                v, method = _repair(rays, d, rng)
                if v is None:
                    raise RealizationFailed("no direction restores symmetry", trace=trace)
            v = _shorten(v, _arrangement(rays, d))
            pending = None
        else:
            raise RealizationFailed("configuration lost its balance", trace=trace)
        Pc = P.appended(origin)
        if not Pc.general_position:
            raise RealizationFailed("inserted center breaks general position", trace=trace)
        c = len(P)
        central = _tukey_depth_gp(Pc, c)
        if central != (len(Pc) - d + 2) // 2 or central < target:
            raise RealizationFailed(f"central depth {central} below target {target}", trace=trace)
        Q, events = push_to_depth(Pc, c, v, target, seed=rng.randrange(1 << 30))
        point = Q[c]
        direction = primitive(point)
        t = Fraction(0)
        for x, y in zip(point, v):
            if y:
                t = x / y
                break
        trace.steps.append(
            RealizationStep(point, target, direction, tuple(events), t, central, kind, method)
        )
        P = Q
    trace.final = P
    return P, trace


def realize(D: Sequence[int], d: int, seed: int = 0) -> tuple[PointSet, RealizationTrace]:
    """A general-position point set in ``R^d`` whose point-depth histogram is ``D``."""
    if not isinstance(d, int) or d < 2:
        raise InputError("realization needs d >= 2")
    entries = canonical(D)
    if not entries or not validate_point_histogram(entries, d):
        raise InputError(f"{list(entries)} is not a point-depth histogram in R^{d}")
    if sum(entries) < d + 1:
        raise InputError(f"need at least {d + 1} points")
    failure: RealizationFailed | None = None
    for attempt in range(REALIZE_ATTEMPTS):
        s = seed + 7919 * attempt
        try:
            P, trace = _realize_once(entries, d, s)
        except RealizationFailed as exc:
            failure = exc
            continue
        if P.general_position and depth_histogram(P).entries == entries:
            return P, trace
        failure = RealizationFailed("measured histogram differs from the request", trace=trace)
    assert failure is not None
    raise failure
