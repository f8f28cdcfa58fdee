"""Exact integer/rational linear algebra and ellipsoid enumeration.

Everything here works on plain nested lists of ``int`` or ``Fraction``;
no floating point is used anywhere so that an empty enumeration is a
proof of absence.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import EnumerationLimit, PreconditionError

DEFAULT_MAX_ENUM = 10**7


def max_enum() -> int:
    return int(os.environ.get("QUATFORMS_MAX_ENUM", DEFAULT_MAX_ENUM))


# -- small matrix helpers ---------------------------------------------------

def mat_mul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


def transpose(A):
    return [list(r) for r in zip(*A)]


def congruent(U, G):
    """U G U^t."""
    return mat_mul(mat_mul(U, G), transpose(U))


def det(M) -> Fraction | int:
    n = len(M)
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    if n == 3:
        return (
            M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
            - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
            + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0])
        )
    A = [[Fraction(x) for x in row] for row in M]
    d = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            d = -d
        d *= A[c][c]
        for r in range(c + 1, n):
            f = A[r][c] / A[c][c]
            if f:
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return d


def adjugate3(A):
    """Cofactor matrix of a symmetric or general 3x3 matrix (transposed cofactors)."""
    (a, b, c), (d, e, f), (g, h, i) = A
    return [
        [e * i - f * h, c * h - b * i, b * f - c * e],
        [f * g - d * i, a * i - c * g, c * d - a * f],
        [d * h - e * g, b * g - a * h, a * e - b * d],
    ]


def inverse(M):
    """Exact inverse over the rationals (Gauss-Jordan)."""
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] != 0), None)
        if piv is None:
            raise PreconditionError("singular matrix")
        A[c], A[piv] = A[piv], A[c]
        pv = A[c][c]
        A[c] = [x / pv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [row[n:] for row in A]


def unimodular_inverse(U):
    inv = inverse(U)
    out = [[int(x) for x in row] for row in inv]
    if any(x != y for r1, r2 in zip(out, inv) for x, y in zip(r1, r2)):
        raise PreconditionError("matrix is not unimodular")
    return out


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


# -- Hermite normal form ----------------------------------------------------

def hnf(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of an integer matrix.

    Returns the nonzero rows, upper echelon, positive pivots, entries above
    each pivot reduced into [0, pivot).
    """
    A = [list(map(int, r)) for r in rows]
    if not A:
        return []
    ncols = len(A[0])
    r = 0
    pivots = []
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, len(A)) if A[i][c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(A[i][c]))
            A[r], A[i0] = A[i0], A[r]
            done = True
            for i in range(r + 1, len(A)):
                if A[i][c]:
                    q = A[i][c] // A[r][c]
                    A[i] = [x - q * y for x, y in zip(A[i], A[r])]
                    if A[i][c]:
                        done = False
            if done:
                break
        if r < len(A) and A[r][c] != 0:
            if A[r][c] < 0:
                A[r] = [-x for x in A[r]]
            for i in range(r):
                q = A[i][c] // A[r][c]
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[r])]
            pivots.append(c)
            r += 1
            if r == len(A):
                break
    return [row for row in A[:r]]


def hnf_rational(rows) -> list[list[Fraction]]:
    den = 1
    for row in rows:
        for x in row:
            den = math.lcm(den, Fraction(x).denominator)
    ints = [[int(Fraction(x) * den) for x in row] for row in rows]
    return [[Fraction(x, den) for x in row] for row in hnf(ints)]


def solve_left(B, v):
    """Coordinates x with x B = v for square invertible B (exact)."""
    Binv = inverse(B)
    n = len(B)
    return [sum(Fraction(v[k]) * Binv[k][j] for k in range(n)) for j in range(n)]


def integer_kernel(vec: Sequence[int]) -> list[list[int]]:
    """Basis of {x in Z^n : x . vec = 0}."""
    n = len(vec)
    aug = [[int(vec[i])] + [int(i == j) for j in range(n)] for i in range(n)]
    H = hnf(aug)
    return [row[1:] for row in H if row[0] == 0]


# -- ellipsoid enumeration --------------------------------------------------

def _pohst_coefficients(G):
    n = len(G)
    Q = [[Fraction(x) for x in row] for row in G]
    for i in range(n):
        if Q[i][i] <= 0:
            raise PreconditionError("quadratic form is not positive definite")
        for j in range(i + 1, n):
            Q[j][i] = Q[i][j]
            Q[i][j] = Q[i][j] / Q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                Q[k][l] -= Q[k][i] * Q[i][l]
    return Q


def short_vectors(G, bound, limit: int | None = None) -> Iterator[tuple[tuple[int, ...], Fraction]]:
    """All nonzero integer v with v^t G v <= bound, with their values.

    G is a symmetric positive definite matrix (int or Fraction entries).
    Both v and -v are produced.
    """
    n = len(G)
    Q = _pohst_coefficients(G)
    bound = Fraction(bound)
    limit = max_enum() if limit is None else limit
    x = [0] * n
    count = 0

    def rec(i, remaining):
        nonlocal count
        center = -sum(Q[i][j] * x[j] for j in range(i + 1, n))
        qi = Q[i][i]
        radius = math.isqrt(math.floor(remaining / qi)) + 1
        lo = math.floor(center) - radius
        hi = math.ceil(center) + radius
        for xi in range(lo, hi + 1):
            d = xi - center
            used = qi * d * d
            if used > remaining:
                continue
            x[i] = xi
            count += 1
            if count > limit:
                raise EnumerationLimit(f"ellipsoid enumeration exceeded {limit} points")
            if i == 0:
                yield tuple(x), bound - (remaining - used)
            else:
                yield from rec(i - 1, remaining - used)
        x[i] = 0

    for v, val in rec(n - 1, bound):
        if any(v):
            yield v, val
