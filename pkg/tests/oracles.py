"""Independent brute-force oracles.

Nothing here imports the algorithms under test; the only shared code is
the plain TernaryForm/BinaryForm containers.
"""

from __future__ import annotations

import functools
import itertools
import math
from fractions import Fraction


def is_prime_trial(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def legendre_euler(a: int, p: int) -> int:
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def kronecker_slow(a: int, n: int) -> int:
    """Kronecker symbol from the factorization of n and the defining cases at 2 and -1."""
    if n == 0:
        raise ValueError
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    d = 2
    while n > 1:
        if d * d > n:
            d = n
        while n % d == 0:
            n //= d
            if d == 2:
                if a % 2 == 0:
                    return 0
                result *= 1 if a % 8 in (1, 7) else -1
            else:
                s = legendre_euler(a, d)
                if s == 0:
                    return 0
                result *= s
        d += 1
    return result


def sqrt_brute(a: int, m: int) -> list[int]:
    return [x for x in range(m) if (x * x - a) % m == 0]


def det_perm(M) -> Fraction:
    n = len(M)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(1)
        for i in range(n):
            term *= M[i][perm[i]]
        total += -term if inv % 2 else term
    return total


def binary_class_brute(a: int, b: int, c: int) -> tuple[int, int, int]:
    """Reduced representative found by scanning all reduced triples of the same disc
    and testing equivalence through small SL2 matrices."""
    d = b * b - 4 * a * c
    cands = []
    amax = math.isqrt(-d // 3)
    for A in range(1, amax + 1):
        for B in range(-A + 1, A + 1):
            if (B * B - d) % (4 * A):
                continue
            C = (B * B - d) // (4 * A)
            if C < A or (C == A and B < 0):
                continue
            cands.append((A, B, C))
    for A, B, C in cands:
        for p_, q_, r_, s_ in itertools.product(range(-12, 13), repeat=4):
            if p_ * s_ - q_ * r_ != 1:
                continue
            # f(p x + q y, r x + s y)
            na = a * p_ * p_ + b * p_ * r_ + c * r_ * r_
            if na != A:
                continue
            nb = 2 * a * p_ * q_ + b * (p_ * s_ + q_ * r_) + 2 * c * r_ * s_
            if nb == B:
                return A, B, C
    raise AssertionError("no reduced form found within the search box")


def gram_value(G, v) -> int:
    return sum(G[i][j] * v[i] * v[j] for i in range(3) for j in range(3))


@functools.lru_cache(maxsize=8192)
def box_vectors_by_norm(F, bound: int) -> dict:
    """Every v with entries in [-bound, bound], grouped by F(v)."""
    G = F.gram
    out: dict = {}
    for v in itertools.product(range(-bound, bound + 1), repeat=3):
        out.setdefault(gram_value(G, v), []).append(v)
    return out


def ternary_equivalent_brute(F, G, bound: int = 4) -> bool:
    """Search U with entries in [-bound, bound] and U F U^T = G (rows of U have the right norms)."""
    GF, GG = F.gram, G.gram
    by_norm = box_vectors_by_norm(F, bound)
    rows = [by_norm.get(GG[i][i], []) for i in range(3)]

    def bil(u, w):
        return sum(GF[i][j] * u[i] * w[j] for i in range(3) for j in range(3))

    for u in rows[0]:
        for w in rows[1]:
            if bil(u, w) != GG[0][1]:
                continue
            for z in rows[2]:
                if bil(u, z) != GG[0][2] or bil(w, z) != GG[1][2]:
                    continue
                d = (u[0] * (w[1] * z[2] - w[2] * z[1]) - u[1] * (w[0] * z[2] - w[2] * z[0])
                     + u[2] * (w[0] * z[1] - w[1] * z[0]))
                if abs(d) == 1:
                    return True
    return False


def semireduced_ternary(det_max: int, det_filter=None):
    """Positive definite Gram forms with d1 <= d2 <= d3, |2e12|, |2e13| <= d1, |2e23| <= d2.

    Every class with det <= det_max has a member here (Minkowski-reduced forms
    satisfy these bounds and d1 d2 d3 <= 2 det).
    """
    from quatforms.terforms import TernaryForm

    out = []
    d1 = 1
    while d1 ** 3 <= 2 * det_max:
        d2 = d1
        while d1 * d2 * d2 <= 2 * det_max:
            d3 = d2
            while d1 * d2 * d3 <= 2 * det_max:
                for e12 in range(-(d1 // 2), d1 // 2 + 1):
                    for e13 in range(-(d1 // 2), d1 // 2 + 1):
                        for e23 in range(-(d2 // 2), d2 // 2 + 1):
                            f = TernaryForm(d1, d2, d3, e23, e13, e12)
                            det = f.det
                            if 0 < det <= det_max and (det_filter is None or det_filter(det)) and f.is_positive_definite:
                                out.append(f)
                d3 += 1
            d2 += 1
        d1 += 1
    return out


def count_points_brute(a: int, b: int, p: int) -> int:
    squares = {}
    for y in range(p):
        squares[y * y % p] = squares.get(y * y % p, 0) + 1
    return 1 + sum(squares.get((x ** 3 + a * x + b) % p, 0) for x in range(p))
