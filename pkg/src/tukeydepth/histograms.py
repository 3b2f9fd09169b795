"""Feasibility, counting and enumeration of depth histograms.

Histograms are plain sequences of nonnegative integers, 1-indexed by depth:
``D[0]`` is the number of points of depth 1.  A vector is the point-depth
histogram of some general-position set in ``R^d`` exactly when every nonzero
entry at depth ``i >= 2`` is preceded by at least ``2i + d - 3`` points.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Literal, Sequence

from .errors import InputError


def _entries(D: Sequence[int]) -> list[int]:
    entries = list(getattr(D, "entries", D))
    for x in entries:
        if not isinstance(x, int) or isinstance(x, bool):
            raise InputError(f"histogram entries must be integers, got {x!r}")
        if x < 0:
            raise InputError("histogram entries must be nonnegative")
    return entries


def canonical(D: Sequence[int]) -> tuple[int, ...]:
    """Drop trailing zeros."""
    entries = _entries(D)
    while entries and entries[-1] == 0:
        entries.pop()
    return tuple(entries)


def _prefix_condition(entries: Sequence[int], prefix: Sequence[int], offset: int) -> bool:
    running = 0
    for i, x in enumerate(entries, start=1):
        if i >= 2 and x > 0 and running < 2 * i + offset:
            return False
        if i - 1 < len(prefix):
            running += prefix[i - 1]
    return True


def validate_point_histogram(D: Sequence[int], d: int) -> bool:
    entries = _entries(D)
    if d < 2:
        raise InputError("the characterization needs d >= 2")
    return _prefix_condition(entries, entries, d - 3)


def max_depth_bound(n: int, d: int) -> int:
    """Largest possible Tukey depth of a point among ``n`` points in ``R^d``."""
    if n < 1 or d < 1:
        raise InputError("need n >= 1 and d >= 1")
    return max(1, (n - d + 2) // 2)


def check_kflat_necessary(Dk: Sequence[int], D0: Sequence[int], k: int, d: int) -> bool:
    """Test ``sum_{j<i} D0_j >= 2i + d + k - 3`` at every nonzero ``Dk_i``, ``i >= 2``.

    ``Dk`` is the affine histogram of ``k``-flats and ``D0`` the point
    histogram of the same set; the partial sums run over ``D0``.
    """
    dk, d0 = _entries(Dk), _entries(D0)
    if not 0 <= k < d:
        raise InputError(f"need 0 <= k < d, got k={k}, d={d}")
    n = sum(d0)
    if sum(dk) != comb(n, k + 1):
        raise InputError(
            f"{k}-flat histogram has {sum(dk)} entries, expected C({n}, {k + 1}) = {comb(n, k + 1)}"
        )
    return _prefix_condition(dk, d0, d + k - 3)


def check_convex_cross_necessary(cDk: Sequence[int], cDm: Sequence[int], k: int, m: int, d: int) -> bool:
    """Test ``sum_{j<i} cDm_j >= 2 C(i-k-1, m+1)`` at every nonzero ``cDk_i``, ``i >= 2``."""
    dk, dm = _entries(cDk), _entries(cDm)
    if not (0 <= k < d and 0 <= m < d):
        raise InputError("need 0 <= k, m < d")
    running = 0
    for i, x in enumerate(dk, start=1):
        if i >= 2 and x > 0:
            a, b = i - k - 1, m + 1
            need = 2 * comb(a, b) if a >= 0 else 0
            if running < need:
                return False
        if i - 1 < len(dm):
            running += dm[i - 1]
    return True


# --------------------------------------------------------------------------
# counting


def count_with_max_depth(n: int, d: int, l: int) -> int:
    """Number of point histograms of ``n`` points in ``R^d`` whose deepest point has depth ``l``."""
    if d < 2 or n < d + 1:
        raise InputError(f"need d >= 2 and n >= d + 1, got n={n}, d={d}")
    if not 1 <= l <= (n - d + 2) // 2:
        raise InputError(f"depth {l} out of range 1..{(n - d + 2) // 2}")
    # (n+l-d-1)! / (n-d+1)! as a falling product; for l = 1 it is 1/(n-d+1)
    lead = n - 2 * l - d + 3
    if l == 1:
        num, den = lead, n - d + 1
    else:
        num = lead
        for x in range(n - d + 2, n + l - d):
            num *= x
        den = factorial(l - 1)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"closed form is not integral at n={n}, d={d}, l={l}")
    return q


@lru_cache(maxsize=None)
def _rec_prefix(n: int, d: int, l: int) -> int:
    if l < 1 or n < 2 * l + d - 2:
        return 0
    if l == 1:
        return 1
    return sum(_rec_prefix(n - 1, d, i) for i in range(1, l + 1))


@lru_cache(maxsize=None)
def _rec_column(n: int, d: int, l: int) -> int:
    if l < 1 or n < 2 * l + d - 2:
        return 0
    if l == 1:
        return 1
    return sum(_rec_column(j, d, l - 1) for j in range(2 * l + d - 2, n + 1))


def count_recurrence(n: int, d: int, l: int, form: Literal["prefix", "column"] = "prefix") -> int:
    """``D(n, d, l)`` from the removal recurrence.

    ``prefix`` sums ``D(n-1, d, i)`` over ``i <= l``; ``column`` sums
    ``D(j, d, l-1)`` over ``2l + d - 2 <= j <= n``.  Both return 0 when
    ``n < 2l + d - 2`` and 1 at ``l = 1``.
    """
    if d < 2:
        raise InputError("need d >= 2")
    if form == "prefix":
        return _rec_prefix(n, d, l)
    if form == "column":
        return _rec_column(n, d, l)
    raise InputError(f"unknown recurrence form {form!r}")


def count_total(n: int, d: int) -> int:
    """Number of distinct point histograms of ``n`` points in general position in ``R^d``."""
    if d < 2 or n < d + 1:
        raise InputError(f"need d >= 2 and n >= d + 1, got n={n}, d={d}")
    e = n - d
    if e % 2 == 0:
        num, den = 2 * comb(3 * e // 2 + 1, e // 2), e + 2
    else:
        num, den = 3 * comb((3 * e + 1) // 2, (e - 1) // 2), e + 2
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"closed form is not integral at n={n}, d={d}")
    return q


def simplesum_identity_check(n: int, d: int, k: int) -> bool:
    """Evaluate both sides of the summation identity behind the closed form."""
    if k < 2 or n < 2 * k + d - 2:
        raise InputError("need k >= 2 and n >= 2k + d - 2")
    lhs = sum(
        Fraction((j + 3) * factorial(j + 3 * k - 4), factorial(k - 2) * factorial(j + 2 * k - 1))
        for j in range(n - 2 * k - d + 3)
    )
    rhs = Fraction(
        (n - 2 * k - d + 3) * factorial(n + k - d - 1), factorial(k - 1) * factorial(n - d + 1)
    )
    return lhs == rhs


# --------------------------------------------------------------------------
# enumeration


def enumerate_valid(n: int, d: int) -> list[tuple[int, ...]]:
    """All feasible point histograms of ``n`` points in ``R^d``, lexicographically sorted."""
    if d < 2 or n < d + 1:
        raise InputError(f"need d >= 2 and n >= d + 1, got n={n}, d={d}")
    out: list[tuple[int, ...]] = []

    def extend(prefix: list[int], placed: int) -> None:
        remaining = n - placed
        i = len(prefix) + 1
        if i >= 2 and placed < 2 * i + d - 3:
            return
        lo = 1 if i == 1 else 0
        for a in range(lo, remaining + 1):
            prefix.append(a)
            if a == remaining:
                out.append(tuple(prefix))
            else:
                extend(prefix, placed + a)
            prefix.pop()

    extend([], 0)
    out.sort()
    return out


def truncate(D: Sequence[int], i: int, cap: bool = False) -> tuple[int, ...]:
    """Keep depths ``1..i``; with ``cap`` the depth-``i`` entry becomes 1."""
    entries = _entries(D)
    if not 1 <= i <= len(entries):
        raise InputError(f"truncation index {i} out of range 1..{len(entries)}")
    out = entries[:i]
    if cap:
        out[-1] = 1
    return canonical(out)
