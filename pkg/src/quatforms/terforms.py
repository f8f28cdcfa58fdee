"""Integral ternary quadratic forms with integral Gram matrix.

A form is d1 x^2 + d2 y^2 + d3 z^2 + 2 e23 yz + 2 e13 xz + 2 e12 xy, stored
by its Gram matrix [[d1, e12, e13], [e12, d2, e23], [e13, e23, d3]].
Transforms follow the row convention A_g = U A_f U^t.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from . import lattice as lat
from .arith import FactoredModulus, is_prime, primes_up_to, sqrt_mod_all
from .binforms import BinaryForm
from .errors import ContractError, PreconditionError

log = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class TernaryForm:
    d1: int
    d2: int
    d3: int
    e23: int
    e13: int
    e12: int

    @classmethod
    def from_gram(cls, G) -> "TernaryForm":
        for i in range(3):
            for j in range(3):
                if G[i][j] != G[j][i] or int(G[i][j]) != G[i][j]:
                    raise PreconditionError(f"not a symmetric integral Gram matrix: {G}")
        return cls(int(G[0][0]), int(G[1][1]), int(G[2][2]), int(G[1][2]), int(G[0][2]), int(G[0][1]))

    @classmethod
    def from_coefficients(cls, x2, y2, z2, yz, xz, xy) -> "TernaryForm":
        """From the polynomial x2 x^2 + y2 y^2 + z2 z^2 + yz yz + xz xz + xy xy."""
        if yz % 2 or xz % 2 or xy % 2:
            raise PreconditionError("cross coefficients must be even (Gram-integral forms only)")
        return cls(x2, y2, z2, yz // 2, xz // 2, xy // 2)

    @property
    def gram(self):
        return [
            [self.d1, self.e12, self.e13],
            [self.e12, self.d2, self.e23],
            [self.e13, self.e23, self.d3],
        ]

    def coefficients(self):
        """(x^2, y^2, z^2, yz, xz, xy) polynomial coefficients."""
        return (self.d1, self.d2, self.d3, 2 * self.e23, 2 * self.e13, 2 * self.e12)

    def __call__(self, x, y, z):
        v = (x, y, z)
        G = self.gram
        return sum(v[i] * G[i][j] * v[j] for i in range(3) for j in range(3))

    def __str__(self):
        names = ("x^2", "y^2", "z^2", "yz", "xz", "xy")
        terms = [(c, n) for c, n in zip(self.coefficients(), names) if c]
        if not terms:
            return "0"
        out = ""
        for i, (c, n) in enumerate(terms):
            sign = "-" if c < 0 else ("+" if i else "")
            mag = "" if abs(c) == 1 else str(abs(c))
            out += (f" {sign} " if i else sign) + mag + n
        return out

    def transform(self, U) -> "TernaryForm":
        return TernaryForm.from_gram(lat.congruent(U, self.gram))

    @property
    def det(self) -> int:
        return lat.det(self.gram)

    @property
    def tau(self) -> int:
        return math.gcd(self.d1, self.d2, self.d3, self.e23, self.e13, self.e12)

    @property
    def sigma(self) -> int:
        return math.gcd(self.d1, self.d2, self.d3, 2 * self.e23, 2 * self.e13, 2 * self.e12)

    @property
    def is_positive_definite(self) -> bool:
        G = self.gram
        return G[0][0] > 0 and lat.det([r[:2] for r in G[:2]]) > 0 and self.det > 0


def disc(f: TernaryForm) -> int:
    """det(Gram) / 2."""
    d = f.det
    if d % 2:
        raise PreconditionError(f"{f} has odd determinant {d}; discriminant is not integral")
    return d // 2


@dataclass(frozen=True)
class TernaryInvariants:
    omega: int
    delta: int
    sigma: int
    tau: int


def reciprocal(f: TernaryForm) -> tuple[TernaryForm, int]:
    """The primitive form proportional to the adjugate, and the divisor Omega."""
    if f.tau != 1:
        raise PreconditionError(f"{f} is imprimitive (tau = {f.tau})")
    adj = lat.adjugate3(f.gram)
    omega = math.gcd(*(adj[i][j] for i in range(3) for j in range(3)))
    return TernaryForm.from_gram([[x // omega for x in row] for row in adj]), omega


def invariants(f: TernaryForm) -> TernaryInvariants:
    _, omega = reciprocal(f)
    d = f.det
    if d % (omega * omega):
        raise ContractError(f"Omega^2 = {omega * omega} does not divide det = {d}")
    return TernaryInvariants(omega, d // (omega * omega), f.sigma, f.tau)


# -- canonical forms --------------------------------------------------------

def _pair_reduce(G, U):
    """Greedy pairwise size reduction; the resulting diagonal bounds the minima."""
    changed = True
    while changed:
        changed = False
        for i in range(3):
            for j in range(3):
                if i == j or 2 * abs(G[i][j]) <= G[i][i]:
                    continue
                # b_j -= k b_i, k = round(G_ij / G_ii); strictly shrinks G_jj
                k = (2 * G[i][j] + G[i][i]) // (2 * G[i][i])
                T = lat.identity(3)
                T[j][i] = -k
                G = lat.congruent(T, G)
                U = lat.mat_mul(T, U)
                changed = True
    return G, U


def _key(f: TernaryForm):
    return (f.d1, f.d2, f.d3, f.e23, f.e13, f.e12)


def canonicalize(f: TernaryForm) -> tuple[TernaryForm, list[list[int]]]:
    """Unique representative of the class of a positive definite form.

    Among all bases (v1, v2, v3) whose norms are the successive minima (such
    bases exist and are exactly the Minkowski-reduced ones in rank 3), take
    the one with the lexicographically least (d1, d2, d3, e23, e13, e12).
    Returns the form and U with Gram(canonical) = U Gram(f) U^t.
    """
    if not f.is_positive_definite:
        raise PreconditionError(f"{f} is not positive definite")
    G0 = f.gram
    Gr, U0 = _pair_reduce(G0, lat.identity(3))
    bound = max(Gr[i][i] for i in range(3))
    vecs = sorted(lat.short_vectors(G0, bound), key=lambda t: t[1])
    minima = []
    span: list[tuple[int, ...]] = []
    by_norm: dict[int, list[tuple[int, ...]]] = {}
    for v, val in vecs:
        by_norm.setdefault(int(val), []).append(v)
    # successive minima by rank growth
    for v, val in vecs:
        if len(span) == 3:
            break
        trial = span + [v]
        if _rank(trial) > len(span):
            span = trial
            minima.append(int(val))
    if len(minima) != 3:
        raise ContractError("failed to find three successive minima")
    best = None
    best_U = None
    S1, S2, S3 = (by_norm[m] for m in minima)
    for v1 in S1:
        for v2 in S2:
            if v2 == v1 or v2 == tuple(-x for x in v1):
                continue
            for v3 in S3:
                U = [list(v1), list(v2), list(v3)]
                if abs(lat.det(U)) != 1:
                    continue
                g = f.transform(U)
                if best is None or _key(g) < _key(best):
                    best, best_U = g, U
    if best is None:
        raise ContractError(f"no basis of successive minima found for {f}")
    return best, best_U


def _rank(vectors) -> int:
    if not vectors:
        return 0
    return len(lat.hnf(vectors))


def canonical(f: TernaryForm) -> TernaryForm:
    return canonicalize(f)[0]


def equivalent(f: TernaryForm, g: TernaryForm):
    """U with Gram(g) = U Gram(f) U^t, or None if the forms are inequivalent."""
    cf, Uf = canonicalize(f)
    cg, Ug = canonicalize(g)
    if cf != cg:
        return None
    U = lat.mat_mul(lat.unimodular_inverse(Ug), Uf)
    if f.transform(U) != g:
        raise ContractError("equivalence witness failed verification")
    return U


# -- representations --------------------------------------------------------

def vectors_of_norm(F: TernaryForm, m: int):
    """All v with F(v) = m, sorted by (sum |v_i|, reversed lexicographic)."""
    out = [v for v, val in lat.short_vectors(F.gram, m) if val == m]
    return sorted(out, key=lambda v: (sum(map(abs, v)), tuple(-x for x in v)))


def represents_properly(F: TernaryForm, m: int):
    """A primitive v with F(v) = m, or None; exhaustive over the ellipsoid."""
    if not F.is_positive_definite:
        raise PreconditionError(f"{F} is not positive definite")
    for v in vectors_of_norm(F, m):
        if math.gcd(*v) == 1:
            return v
    return None


def complete_basis(v) -> list[list[int]]:
    """A unimodular matrix (det 1) whose last row is the primitive vector v."""
    v = [int(x) for x in v]
    if math.gcd(*v) != 1:
        raise PreconditionError(f"{v} is not primitive")
    x, y, z = v
    g, a, b = _xgcd(x, y)
    if g == 0:
        W1 = lat.identity(3)
    else:
        # (x, y, z) -> (g, 0, z)
        W1 = [[a, b, 0], [-y // g, x // g, 0], [0, 0, 1]]
    _, s, t = _xgcd(g, z)
    # (g, 0, z) -> (1, 0, 0), using s g + t z = 1
    W2 = [[s, 0, t], [0, 1, 0], [-z, 0, g]]
    W = lat.mat_mul(W2, W1)
    # v is the first column of W^-1, so the first row of its transpose
    rows = lat.transpose(lat.unimodular_inverse(W))
    U = [list(rows[1]), list(rows[2]), list(rows[0])]
    if lat.det(U) == -1:
        U[0] = [-e for e in U[0]]
    if lat.det(U) != 1 or U[2] != v:
        raise ContractError(f"basis completion failed for {v}")
    return U


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def represented_binary_at(F: TernaryForm, v) -> BinaryForm:
    """Binary form (a, 2t, b) read off the reciprocal after moving v to the third basis vector."""
    U = complete_basis(v)
    G = F.transform(U)
    f, _ = reciprocal(G)
    return BinaryForm(f.d1, 2 * f.e12, f.d2)


def orientation_search(F: TernaryForm, bound: int):
    """All c in {1} and primes <= bound for which F properly represents 2c."""
    try:
        p = disc(F)
    except PreconditionError:
        p = None
    hits = []
    for c in [1] + primes_up_to(bound):
        if c == p:
            continue
        w = represents_properly(F, 2 * c)
        if w is not None:
            hits.append((c, w))
    return hits


# -- representing binary forms (Dickson's construction) ---------------------

@dataclass(frozen=True)
class CongruenceWitness:
    R: int
    S: int
    T: int
    A: int
    B: int
    C: int


@dataclass(frozen=True)
class BinaryRepresentation:
    f: TernaryForm
    F: TernaryForm
    witness: CongruenceWitness


def represent_binary(rho: BinaryForm, C: int, omega: int, delta: int = 1, factors=None) -> list[BinaryRepresentation]:
    """Ternary forms f with invariants (omega, delta) representing rho = (a, 2t, b).

    Runs through every root pair (R, S) of R^2 = -delta a, S^2 = -delta b
    (mod C) with R S = delta t (mod C), builds f and its reciprocal
    F = (A, B, C, R, S, T), and keeps one pair per class of F.
    """
    a, b2t, b = rho
    if b2t % 2:
        raise PreconditionError(f"{rho} has odd middle coefficient")
    t = b2t // 2
    if rho.disc != -4 * omega * C:
        raise PreconditionError(f"disc {rho.disc} != -4 * Omega * C = {-4 * omega * C}")
    if math.gcd(C, delta) != 1:
        raise PreconditionError("C and Delta must be coprime")
    if not rho.is_positive_definite:
        raise PreconditionError(f"{rho} is not positive definite")
    g = rho.content
    if g != 1 and not (g == 4 and t % 4 == 2):
        log.warning("represent_binary: imprimitive input %s outside the content-4 shape", rho)
        raise PreconditionError(f"{rho} is imprimitive (content {g}) outside the supported shape")
    mod = FactoredModulus.from_factors(factors) if factors else _factor_small(C)
    Rs = sqrt_mod_all(-delta * a, mod)
    Ss = sqrt_mod_all(-delta * b, mod)
    out: list[BinaryRepresentation] = []
    seen = set()
    for R in Rs:
        for S in Ss:
            if (R * S - delta * t) % C:
                continue
            B = (R * R + delta * a) // C
            A = (S * S + delta * b) // C
            T = (R * S - delta * t) // C
            num_r, num_s, num_c = S * T - A * R, R * T - B * S, A * B - T * T
            if num_r % delta or num_s % delta or num_c % delta:
                continue
            f = TernaryForm(a, b, num_c // delta, num_r // delta, num_s // delta, t)
            F = TernaryForm(A, B, C, R, S, T)
            if not f.is_positive_definite:
                raise ContractError(f"constructed form {f} is not positive definite")
            Fr, om = reciprocal(f)
            if Fr != F or om != omega:
                raise ContractError(f"reciprocal of {f} is {Fr} (Omega {om}), expected {F} ({omega})")
            key = canonical(F)
            if key in seen:
                continue
            seen.add(key)
            out.append(BinaryRepresentation(f, F, CongruenceWitness(R, S, T, A, B, C)))
    return out


def _factor_small(n: int) -> FactoredModulus:
    # trial division; moduli here are 2c, 2c l^2 and similar products of small primes
    primes = []
    m, d = n, 2
    while d * d <= m:
        while m % d == 0:
            primes.append(d)
            m //= d
        d += 1
    if m > 1:
        primes.append(m)
    return FactoredModulus.of(*primes)
