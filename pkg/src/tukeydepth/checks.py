"""Named property suites run by ``tukeydepth check``.

Each suite returns a list of :class:`CheckResult`.  Without an input set the
suites draw a small seeded corpus of random general-position sets; with one
they run the per-set properties on that set only.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .depth import affine_depth, convex_depth, depth_histogram, point_depths
from .geometry import PointSet, random_point_set
from .histograms import (
    check_convex_cross_necessary,
    count_recurrence,
    count_total,
    count_with_max_depth,
    enumerate_valid,
    max_depth_bound,
    simplesum_identity_check,
    validate_point_histogram,
)
from .oracle import hyperplane_depth_oracle, sweep_depth_oracle_2d
from .realizer import realize


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    cases: int
    detail: str = ""

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "cases": self.cases, "detail": self.detail}


def corpus(seed: int = 0, size: int = 12) -> list[PointSet]:
    out = []
    for i in range(size):
        d = 2 if i % 2 == 0 else 3
        n = 5 + i % (5 if d == 2 else 3)
        out.append(random_point_set(n, d, seed=seed * 1000 + i, coord_bound=50))
    return out


def _tally(name: str, outcomes: list[tuple[bool, str]]) -> CheckResult:
    failures = [msg for ok, msg in outcomes if not ok]
    return CheckResult(name, not failures, len(outcomes), failures[0] if failures else "")


def necessity(sets: list[PointSet]) -> list[CheckResult]:
    valid, bound, cross = [], [], []
    for P in sets:
        n, d = len(P), P.dim
        h = depth_histogram(P).entries
        valid.append((validate_point_histogram(h, d), f"histogram {list(h)} rejected in R^{d}"))
        bound.append((len(h) <= max_depth_bound(n, d), f"max depth {len(h)} exceeds the bound"))
        if d == 2:
            c0 = depth_histogram(P, 0, "convex").entries
            c1 = depth_histogram(P, 1, "convex").entries
            for (k, a), (m, b) in [((0, c0), (1, c1)), ((1, c1), (0, c0)), ((1, c1), (1, c1))]:
                ok = check_convex_cross_necessary(a, b, k, m, d)
                cross.append((ok, f"convex cross condition fails for k={k}, m={m}"))
    return [
        _tally("point histogram passes the characterization", valid),
        _tally("max depth within (n-d+2)/2", bound),
        _tally("convex cross-dimensional condition (planar)", cross),
    ]


def removal_invariance(sets: list[PointSet]) -> list[CheckResult]:
    outcomes = []
    for P in sets:
        dep = point_depths(P)
        top = dep.index(max(dep))
        rest = point_depths(P.without(top))
        outcomes.append((rest == dep[:top] + dep[top + 1:], "depths changed after removing a deepest point"))
    return [_tally("removing a deepest point keeps other depths", outcomes)]


def oracle_equivalence(sets: list[PointSet]) -> list[CheckResult]:
    pts, pairs = [], []
    for P in sets:
        n = len(P)
        depths = point_depths(P)
        for i in range(n):
            fast = depths[i]
            ref = sweep_depth_oracle_2d(P, i) if P.dim == 2 else hyperplane_depth_oracle(P, i)
            pts.append((fast == ref, f"point {i}: {fast} vs oracle {ref}"))
        if P.dim == 2:
            for Q in combinations(range(n), 2):
                for mode, fn in (("affine", affine_depth), ("convex", convex_depth)):
                    a, b = fn(P, Q), sweep_depth_oracle_2d(P, Q, mode)
                    pairs.append((a == b, f"{mode} pair {Q}: {a} vs oracle {b}"))
    return [
        _tally("point depth matches the brute-force oracle", pts),
        _tally("pair depths match the planar sweep", pairs),
    ]


def counting_identities(_sets=None) -> list[CheckResult]:
    enum, rec, ident = [], [], []
    for d in (2, 3):
        for n in range(d + 1, d + 8):
            hs = enumerate_valid(n, d)
            enum.append((len(hs) == count_total(n, d), f"enumeration size at n={n}, d={d}"))
            for l in range(1, (n - d + 2) // 2 + 1):
                closed = count_with_max_depth(n, d, l)
                split = sum(1 for h in hs if len(h) == l)
                enum.append((split == closed, f"max-depth split at n={n}, d={d}, l={l}"))
                for form in ("prefix", "column"):
                    rec.append((count_recurrence(n, d, l, form) == closed, f"{form} form at {n},{d},{l}"))
    for k in range(2, 5):
        for n in range(2 * k, 2 * k + 6):
            ident.append((simplesum_identity_check(n, 2, k), f"summation identity at n={n}, k={k}"))
    return [
        _tally("enumeration matches the closed forms", enum),
        _tally("recurrences match the closed form", rec),
        _tally("summation identity", ident),
    ]


def roundtrip(sets: list[PointSet] | None, seed: int = 0, given: bool = False) -> list[CheckResult]:
    outcomes = []
    if given and sets:
        targets = [(depth_histogram(P).entries, P.dim) for P in sets]
    else:
        targets = [(h, 2) for n in range(3, 8) for h in enumerate_valid(n, 2)]
        targets += [(h, 3) for n in range(4, 7) for h in enumerate_valid(n, 3)]
    for h, d in targets:
        P, _ = realize(h, d, seed)
        got = depth_histogram(P).entries
        outcomes.append((got == tuple(h) and P.general_position, f"{list(h)} in R^{d} came back as {list(got)}"))
    return [_tally("realized sets reproduce their histogram", outcomes)]


SUITES: dict[str, Callable] = {
    "necessity": necessity,
    "removal-invariance": removal_invariance,
    "oracle-equivalence": oracle_equivalence,
    "counting-identities": counting_identities,
    "roundtrip": roundtrip,
}


def run_suite(name: str, sets: list[PointSet] | None, seed: int = 0) -> list[CheckResult]:
    given = sets is not None
    if sets is None:
        sets = corpus(seed)
    if name == "roundtrip":
        return roundtrip(sets, seed, given)
    return SUITES[name](sets)
