"""Acceptance criteria, one test each.

Every test records a ``criterion N: PASS|FAIL`` line; the lines are printed
in the pytest terminal summary, or directly when this file is run as a
script.  Time limits are part of each criterion.
"""

import sys
import time
from functools import lru_cache
from itertools import combinations

from tukeydepth import (
    ConfigKind,
    PointSet,
    affine_depth,
    check_convex_cross_necessary,
    check_kflat_necessary,
    classify_configuration,
    convex_depth,
    count_recurrence,
    count_total,
    count_with_max_depth,
    depth_histogram,
    enumerate_valid,
    max_depth_bound,
    point_depths,
    random_point_set,
    realize,
    simplesum_identity_check,
    tukey_depth,
    validate_point_histogram,
)
from tukeydepth.oracle import hyperplane_depth_oracle, sweep_depth_oracle_2d
from tukeydepth.realizer import rational_regular_polygon

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script from elsewhere
    ACCEPTANCE_LINES = []


def record(number, title, ok, elapsed, limit, detail=""):
    within = elapsed <= limit
    status = "PASS" if ok and within else "FAIL"
    line = f"criterion {number:>2}: {status}  {title} ({elapsed:.1f}s of {limit}s)"
    if detail:
        line += f"  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, detail or title
    assert within, f"took {elapsed:.1f}s, limit {limit}s"


@lru_cache(maxsize=None)
def random_corpus():
    planar = [random_point_set(4 + i % 8, 2, seed=10_000 + i) for i in range(200)]
    spatial = [random_point_set(5 + i % 5, 3, seed=20_000 + i) for i in range(200)]
    return planar, spatial


@lru_cache(maxsize=None)
def realizations():
    out = []
    suites = [(n, 2) for n in range(3, 10)] + [(n, 3) for n in range(4, 9)]
    for n, d in suites:
        for h in enumerate_valid(n, d):
            P, trace = realize(h, d, seed=n)
            out.append((h, d, P, trace))
    return out


def test_criterion_01_counting_exactness():
    t = time.perf_counter()
    bad = []
    for d in (2, 3, 4):
        for n in range(d + 1, d + 11):
            hs = enumerate_valid(n, d)
            if len(hs) != count_total(n, d):
                bad.append(f"size n={n} d={d}")
            for l in range(1, (n - d + 2) // 2 + 1):
                if sum(1 for h in hs if len(h) == l) != count_with_max_depth(n, d, l):
                    bad.append(f"split n={n} d={d} l={l}")
    spots = [
        count_total(3, 2) == 1,
        all(count_with_max_depth(n, 2, 1) == 1 for n in range(3, 30)),
        count_total(4, 2) == 2,
        count_total(5, 2) == 3,
        count_with_max_depth(5, 2, 2) == 2,
        count_total(9, 2) == 55,
    ]
    if not all(spots):
        bad.append("spot values")
    record(1, "enumeration matches closed forms", not bad, time.perf_counter() - t, 10, "; ".join(bad[:3]))


def test_criterion_02_recurrence_consistency():
    t = time.perf_counter()
    bad = []
    for d in (2, 3, 4):
        for n in range(d + 1, d + 13):
            for l in range(1, (n - d + 2) // 2 + 1):
                closed = count_with_max_depth(n, d, l)
                if not count_recurrence(n, d, l, "prefix") == count_recurrence(n, d, l, "column") == closed:
                    bad.append(f"n={n} d={d} l={l}")
    record(2, "both recurrences equal the closed form", not bad, time.perf_counter() - t, 1, "; ".join(bad[:3]))


def test_criterion_03_identity_suite():
    t = time.perf_counter()
    bad = []
    for d in (2, 3, 4):
        for n in range(d + 1, d + 13):
            top = (n - d + 2) // 2
            if count_total(n, d) != sum(count_with_max_depth(n, d, l) for l in range(1, top + 1)):
                bad.append(f"total n={n} d={d}")
            if count_total(n, d) != count_with_max_depth(n + 1, d, top):
                bad.append(f"shift n={n} d={d}")
        for k in range(2, 7):
            for n in range(2 * k + d - 2, 2 * k + d + 11):
                if not simplesum_identity_check(n, d, k):
                    bad.append(f"sum n={n} d={d} k={k}")
    record(3, "counting identities", not bad, time.perf_counter() - t, 1, "; ".join(bad[:3]))


def test_criterion_04_necessity():
    t = time.perf_counter()
    bad = []
    for P in random_corpus()[0] + random_corpus()[1]:
        h = depth_histogram(P).entries
        if not validate_point_histogram(h, P.dim):
            bad.append(f"{list(h)} in R^{P.dim}")
        if len(h) > max_depth_bound(len(P), P.dim):
            bad.append(f"depth {len(h)} with n={len(P)}")
    record(4, "measured histograms are feasible (400 sets)", not bad, time.perf_counter() - t, 120, "; ".join(bad[:3]))


def test_criterion_05_removal_invariance():
    t = time.perf_counter()
    bad = 0
    for P in random_corpus()[0] + random_corpus()[1]:
        dep = point_depths(P)
        top = dep.index(max(dep))
        if point_depths(P.without(top)) != dep[:top] + dep[top + 1:]:
            bad += 1
    record(5, "removing a deepest point keeps other depths", bad == 0, time.perf_counter() - t, 120, f"{bad} failures" if bad else "")


def test_criterion_06_oracle_equivalence():
    t = time.perf_counter()
    bad = []
    for i in range(100):
        P = random_point_set(4 + i % 7, 2, seed=30_000 + i)
        n = len(P)
        for q in range(n):
            if tukey_depth(P, q) != sweep_depth_oracle_2d(P, q):
                bad.append(f"planar set {i} point {q}")
        for Q in combinations(range(n), 2):
            if affine_depth(P, Q) != sweep_depth_oracle_2d(P, Q, "affine"):
                bad.append(f"planar set {i} affine {Q}")
            if convex_depth(P, Q) != sweep_depth_oracle_2d(P, Q, "convex"):
                bad.append(f"planar set {i} convex {Q}")
    for i in range(50):
        P = random_point_set(5 + i % 5, 3, seed=40_000 + i)
        for q in range(len(P)):
            if tukey_depth(P, q) != hyperplane_depth_oracle(P, q):
                bad.append(f"spatial set {i} point {q}")
    record(6, "depth engine agrees with brute-force oracles", not bad, time.perf_counter() - t, 180, "; ".join(bad[:3]))


def test_criterion_07_symmetric_center_depth():
    t = time.perf_counter()
    bad = []
    for m in range(5, 12, 2):
        P = PointSet(2, tuple(rational_regular_polygon(m)) + ((0, 0),))
        n = m + 1
        if tukey_depth(P, m) != (n - 2 + 2) // 2:
            bad.append(f"depth m={m}")
        if classify_configuration(P, m) is not ConfigKind.SYMMETRIC:
            bad.append(f"class m={m}")
    record(7, "center of odd polygons", not bad, time.perf_counter() - t, 10, "; ".join(bad))


def test_criterion_08_realization_roundtrip():
    t = time.perf_counter()
    bad = []
    runs = realizations()
    for h, d, P, trace in runs:
        if depth_histogram(P).entries != h or not P.general_position or trace.replay() != P:
            bad.append(f"{list(h)} in R^{d}")
    record(8, f"realize then re-measure ({len(runs)} histograms)", not bad, time.perf_counter() - t, 600, "; ".join(bad[:3]))


def test_criterion_09_push_invariants():
    t = time.perf_counter()
    bad = []
    events = 0
    for h, d, P, trace in realizations():
        for step in trace.steps:
            for e in step.events:
                events += 1
                if abs(e.delta) > 1 or (e.delta and not e.through_convex_hull):
                    bad.append(f"{list(h)} event at t={e.t}")
        # replay every step and confirm the earlier points keep their depths
        Q = trace.initial
        for step in trace.steps:
            before = point_depths(Q)
            Q = Q.appended(step.point)
            if point_depths(Q)[: len(before)] != before:
                bad.append(f"{list(h)} insertion changed depths")
    record(9, f"push events ({events} events)", not bad, time.perf_counter() - t, 600, "; ".join(bad[:3]))


def test_criterion_10_cross_conditions():
    t = time.perf_counter()
    planar, spatial = random_corpus()
    convex_bad = 0
    for P in planar:
        c = {k: depth_histogram(P, k, "convex").entries for k in (0, 1)}
        for k in (0, 1):
            for m in (0, 1):
                if not check_convex_cross_necessary(c[k], c[m], k, m, 2):
                    convex_bad += 1
    kflat_bad = 0
    for P in spatial:
        d0 = depth_histogram(P, 0).entries
        d1 = depth_histogram(P, 1).entries
        if not check_kflat_necessary(d1, d0, 1, 3):
            kflat_bad += 1
    detail = (
        f"convex cross condition: {convex_bad} violations over {4 * len(planar)} checks; "
        f"k-flat condition: {kflat_bad} of {len(spatial)} sets violate it"
    )
    record(10, "cross-dimensional conditions", convex_bad == 0 and kflat_bad == 0, time.perf_counter() - t, 120, detail)


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
