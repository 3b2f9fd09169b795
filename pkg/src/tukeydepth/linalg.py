"""Exact linear algebra on integer and rational vectors.

Everything here works on plain tuples.  Integer routines use fraction-free
(Bareiss) elimination so intermediate values stay integral; the rational
routines use :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd, lcm
from typing import Sequence

IntVec = tuple[int, ...]


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def add(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def scale(c, u: Sequence) -> tuple:
    return tuple(c * a for a in u)


def sign(x) -> int:
    return (x > 0) - (x < 0)


def det_int(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = m
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    flip = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    flip = -flip
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return flip * m[n - 1][n - 1]


def clear_denominators(vec: Sequence) -> IntVec:
    """Positive multiple of a rational vector with integer entries."""
    fr = [Fraction(x) for x in vec]
    den = reduce(lcm, (x.denominator for x in fr), 1)
    return tuple(int(x * den) for x in fr)


def primitive(vec: Sequence) -> IntVec:
    """Positive multiple of ``vec`` with coprime integer entries."""
    iv = clear_denominators(vec)
    g = reduce(gcd, iv, 0)
    if g == 0:
        return iv
    return tuple(x // g for x in iv)


def line_key(vec: Sequence) -> IntVec:
    """Primitive vector normalized so the first nonzero entry is positive."""
    p = primitive(vec)
    for x in p:
        if x:
            return p if x > 0 else tuple(-y for y in p)
    return p


def rank(vectors: Sequence[Sequence]) -> int:
    return len(independent_subset(vectors))


def independent_subset(vectors: Sequence[Sequence]) -> list[int]:
    """Indices of a greedily chosen maximal linearly independent subset."""
    chosen: list[int] = []
    reduced: list[tuple[int, list[Fraction]]] = []  # (pivot column, row)
    for idx, v in enumerate(vectors):
        row = [Fraction(x) for x in v]
        for col, basis_row in reduced:
            if row[col]:
                f = row[col] / basis_row[col]
                row = [a - f * b for a, b in zip(row, basis_row)]
        for col, x in enumerate(row):
            if x:
                reduced.append((col, row))
                chosen.append(idx)
                break
    return chosen


def generalized_cross(vectors: Sequence[Sequence[int]]) -> IntVec:
    """Integer vector orthogonal to ``m - 1`` integer vectors in ``Z^m``.

    Entry ``j`` is the signed cofactor obtained by deleting column ``j``; the
    result is zero exactly when the vectors are linearly dependent.
    """
    m = len(vectors) + 1
    out = []
    for j in range(m):
        minor = [[row[c] for c in range(m) if c != j] for row in vectors]
        out.append((-1) ** j * det_int(minor))
    return tuple(out)


def perp_basis(v: Sequence[int]) -> list[IntVec]:
    """Integer basis of the orthogonal complement of a nonzero vector."""
    m = len(v)
    piv = next(i for i, x in enumerate(v) if x)
    basis = []
    for j in range(m):
        if j == piv:
            continue
        b = [0] * m
        b[j] = v[piv]
        b[piv] = -v[j]
        basis.append(tuple(b))
    return basis


def nullspace_int(rows: Sequence[Sequence]) -> list[IntVec]:
    """Integer basis of ``{x : r . x = 0 for every row r}``."""
    if not rows:
        return []
    ncols = len(rows[0])
    a = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        x = [Fraction(0)] * ncols
        x[fcol] = Fraction(1)
        for i, pc in enumerate(pivots):
            x[pc] = -a[i][fcol]
        basis.append(primitive(x))
    return basis


def orthogonal_basis(vectors: Sequence[Sequence]) -> list[tuple[Fraction, ...]]:
    """Rational Gram-Schmidt without normalization; drops dependent inputs."""
    out: list[tuple[Fraction, ...]] = []
    for v in vectors:
        w = tuple(Fraction(x) for x in v)
        for b in out:
            w = sub(w, scale(dot(w, b) / dot(b, b), b))
        if any(w):
            out.append(w)
    return out


def solve(rows: Sequence[Sequence], rhs: Sequence) -> tuple[Fraction, ...] | None:
    """Solve a consistent (possibly overdetermined) system exactly.

    Returns ``None`` if the system is inconsistent or underdetermined.
    """
    n = len(rows[0])
    a = [[Fraction(x) for x in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    r = 0
    pivots = []
    for c in range(n):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            return None
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    if any(row[n] for row in a[r:]):
        return None
    return tuple(a[i][n] for i in range(n))


def spanning_normals(vectors: Sequence[Sequence[int]], size: int):
    """Yield normals of every linearly independent ``size``-subset."""
    for combo in combinations(vectors, size):
        nrm = generalized_cross(combo)
        if any(nrm):
            yield combo, nrm


def sign_vector(normals: Sequence[Sequence[int]], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sign(dot(n, v)) for n in normals)


def cell_representatives(normals: Sequence[Sequence[int]], dim: int) -> list[IntVec]:
    """One integer direction inside every open cell of a central arrangement.

    The arrangement consists of the hyperplanes ``{x : n . x = 0}``.  Every
    open cell of a pointed arrangement has an extreme ray orthogonal to
    ``dim - 1`` independent normals; the cells around such a ray are the cells
    of the tight hyperplanes inside the ray's orthogonal complement, found
    recursively and then nudged off the ray by a small exact step.
    """
    lines = sorted({line_key(n) for n in normals if any(n)})
    if not lines:
        return [tuple(int(i == 0) for i in range(dim))]
    basis = [lines[i] for i in independent_subset(lines)]
    r = len(basis)
    if r < dim:
        # only the component inside span(basis) matters
        coords = [tuple(dot(n, b) for b in basis) for n in lines]
        out = []
        for c in cell_representatives(coords, r):
            out.append(primitive([sum(cj * b[i] for cj, b in zip(c, basis)) for i in range(dim)]))
        return out
    if r == 1:
        n = lines[0]
        return [n, tuple(-x for x in n)]
    found: dict[tuple[int, ...], IntVec] = {}
    for combo in combinations(lines, dim - 1):
        ray = generalized_cross(combo)
        if not any(ray):
            continue
        for rho in (ray, tuple(-x for x in ray)):
            tight = [n for n in lines if dot(n, rho) == 0]
            loose = [n for n in lines if dot(n, rho) != 0]
            B = perp_basis(rho)
            lowered = [tuple(dot(b, n) for b in B) for n in tight]
            for c in cell_representatives(lowered, dim - 1):
                w = [sum(cj * b[i] for cj, b in zip(c, B)) for i in range(dim)]
                ratios = [
                    Fraction(abs(dot(n, rho)), abs(dot(n, w))) for n in loose if dot(n, w)
                ]
                eps = min(ratios) / 2 if ratios else Fraction(1)
                v = primitive([Fraction(a) + eps * b for a, b in zip(rho, w)])
                found.setdefault(sign_vector(lines, v), v)
    return [found[k] for k in sorted(found)]
