"""Exact arithmetic in the definite quaternion algebra ramified at p.

Two presentations are supported: the standard one (i^2 = -q, j^2 = -cp,
k = ij) used by Eichler orders, and the even Clifford presentation
attached to a ternary form.  Orders and ideals are rank-4 lattices kept in
rational Hermite normal form, so lattice equality is matrix equality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from . import lattice as lat
from .arith import is_prime, kronecker
from .errors import ContractError, PreconditionError
from .terforms import TernaryForm, disc as ternary_disc

Vec = tuple  # 4-tuple of Fraction


def _vec(xs) -> Vec:
    return tuple(Fraction(x) for x in xs)


@dataclass(frozen=True)
class AlgebraPresentation:
    kind: str
    params: tuple
    table: tuple = field(compare=False, repr=False)

    @cached_property
    def _basis_trd(self) -> tuple:
        # reduced trace = half the trace of left multiplication
        return tuple(sum(self.table[a][b][b] for b in range(4)) / 2 for a in range(4))

    def element(self, *coords) -> "QuaternionElement":
        if len(coords) == 1:
            coords = tuple(coords[0])
        return QuaternionElement(_vec(coords), self)

    @property
    def one(self):
        return self.element(1, 0, 0, 0)

    @property
    def gens(self):
        return tuple(self.element(*(int(i == j) for j in range(4))) for i in range(4))

    def mul_coords(self, u: Vec, v: Vec) -> Vec:
        out = [Fraction(0)] * 4
        for a in range(4):
            if not u[a]:
                continue
            for b in range(4):
                if not v[b]:
                    continue
                s = u[a] * v[b]
                row = self.table[a][b]
                for k in range(4):
                    if row[k]:
                        out[k] += s * row[k]
        return tuple(out)

    def trd_coords(self, u: Vec) -> Fraction:
        return sum(x * t for x, t in zip(u, self._basis_trd))


@dataclass(frozen=True)
class QuaternionElement:
    coords: Vec
    alg: AlgebraPresentation

    def _check(self, other):
        if other.alg != self.alg:
            raise PreconditionError("elements live in different presentations")

    def __add__(self, other):
        if not isinstance(other, QuaternionElement):
            other = self.alg.one * other
        self._check(other)
        return QuaternionElement(tuple(x + y for x, y in zip(self.coords, other.coords)), self.alg)

    __radd__ = __add__

    def __neg__(self):
        return QuaternionElement(tuple(-x for x in self.coords), self.alg)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QuaternionElement):
            self._check(other)
            return QuaternionElement(self.alg.mul_coords(self.coords, other.coords), self.alg)
        s = Fraction(other)
        return QuaternionElement(tuple(s * x for x in self.coords), self.alg)

    def __rmul__(self, other):
        s = Fraction(other)
        return QuaternionElement(tuple(s * x for x in self.coords), self.alg)

    def __truediv__(self, other):
        return self * (1 / Fraction(other))

    def trd(self) -> Fraction:
        return self.alg.trd_coords(self.coords)

    def conj(self) -> "QuaternionElement":
        return self.alg.one * self.trd() - self

    def nrd(self) -> Fraction:
        return (self.trd() ** 2 - (self * self).trd()) / 2

    def inverse(self) -> "QuaternionElement":
        n = self.nrd()
        if n == 0:
            raise PreconditionError("zero element has no inverse")
        return self.conj() / n

    def __repr__(self):
        return f"Q{tuple(str(x) for x in self.coords)}"


def mul(x: QuaternionElement, y: QuaternionElement) -> QuaternionElement:
    return x * y


def conj(x: QuaternionElement) -> QuaternionElement:
    return x.conj()


def trd(x: QuaternionElement) -> Fraction:
    return x.trd()


def nrd(x: QuaternionElement) -> Fraction:
    return x.nrd()


# -- presentations ----------------------------------------------------------

def standard_presentation(p: int, c: int, q: int) -> AlgebraPresentation:
    """Basis (1, i, j, k): i^2 = -q, j^2 = -cp, k = ij = -ji."""
    a, b = -q, -c * p
    # products of basis elements as coordinate vectors
    e = lambda *xs: _vec(xs)
    T = [
        [e(1, 0, 0, 0), e(0, 1, 0, 0), e(0, 0, 1, 0), e(0, 0, 0, 1)],
        [e(0, 1, 0, 0), e(a, 0, 0, 0), e(0, 0, 0, 1), e(0, 0, a, 0)],
        [e(0, 0, 1, 0), e(0, 0, 0, -1), e(b, 0, 0, 0), e(0, -b, 0, 0)],
        [e(0, 0, 0, 1), e(0, 0, -a, 0), e(0, b, 0, 0), e(-a * b, 0, 0, 0)],
    ]
    return AlgebraPresentation("standard", (p, c, q), tuple(tuple(r) for r in T))


def clifford_symbols(Q: TernaryForm) -> tuple[int, int, int, int, int, int]:
    """(a, b, c, u, v, w) with Q = 2a x^2 + 2b y^2 + 2c z^2 + 2u yz + 2v xz + 2w xy."""
    if Q.d1 % 2 or Q.d2 % 2 or Q.d3 % 2:
        raise PreconditionError(f"{Q} has an odd diagonal coefficient; Clifford symbols are not integral")
    return Q.d1 // 2, Q.d2 // 2, Q.d3 // 2, Q.e23, Q.e13, Q.e12


def clifford_presentation(Q: TernaryForm) -> AlgebraPresentation:
    a, b, c, u, v, w = clifford_symbols(Q)
    e = lambda *xs: _vec(xs)
    one, I, J, K = e(1, 0, 0, 0), e(0, 1, 0, 0), e(0, 0, 1, 0), e(0, 0, 0, 1)
    T = [
        [one, I, J, K],
        [I, e(-b * c, u, 0, 0), e(c * w, 0, 0, -c), e(-u * w, w, b, u)],
        [J, e(-u * v, v, u, c), e(-a * c, 0, v, 0), e(a * u, -a, 0, 0)],
        [K, e(b * v, 0, -b, 0), e(-v * w, a, w, v), e(-a * b, 0, 0, w)],
    ]
    # ik = -uw + w i + b j + u k ; ji = -uv + v i + u j + c k ; kj = -vw + a i + w j + v k
    return AlgebraPresentation("clifford", (Q.d1, Q.d2, Q.d3, Q.e23, Q.e13, Q.e12), tuple(tuple(r) for r in T))


def is_associative(alg: AlgebraPresentation) -> bool:
    g = alg.gens
    return all((x * y) * z == x * (y * z) for x in g for y in g for z in g)


_NAMES = ("1", "i", "j", "k")


def _linear(const, coef, name) -> str:
    parts = []
    if coef:
        mag = "" if abs(coef) == 1 else str(abs(coef))
        parts.append(("-" if coef < 0 else "") + mag + name)
    if const or not parts:
        if parts:
            parts.append(("- " if const < 0 else "+ ") + str(abs(const)))
        else:
            parts.append(str(const))
    return " ".join(parts)


def _product_string(const, coef, name) -> str:
    # a relation  m (s - e)  with m > 0, written the way the relations are usually typeset
    m = -coef
    if m > 0 and const % m == 0:
        s = const // m
        if s == 0:
            return _linear(0, coef, name)
        inner = f"{s} - {name}"
        return inner if m == 1 else f"{m}({inner})"
    return _linear(const, coef, name)


def relation_strings(alg: AlgebraPresentation) -> list[str]:
    """The six relations i^2, j^2, k^2, jk, ki, ij as strings, e.g. 'i^2 = -i - 24'."""
    T = alg.table
    out = []
    for idx, name in ((1, "i"), (2, "j"), (3, "k")):
        row = T[idx][idx]
        if any(row[t] for t in range(1, 4) if t != idx):
            raise PreconditionError("square not of the form x e + y")
        out.append(f"{name}^2 = {_linear(int(row[0]), int(row[idx]), name)}")
    for (x, y, z) in ((2, 3, 1), (3, 1, 2), (1, 2, 3)):
        row = T[x][y]
        if any(row[t] for t in range(1, 4) if t != z):
            raise PreconditionError("product not of the form x e + y")
        out.append(f"{_NAMES[x]}{_NAMES[y]} = {_product_string(int(row[0]), int(row[z]), _NAMES[z])}")
    return out


# -- lattices ---------------------------------------------------------------

@dataclass(frozen=True)
class OrderLattice:
    basis: tuple  # 4 rows, rational HNF
    alg: AlgebraPresentation

    @classmethod
    def span(cls, alg: AlgebraPresentation, generators) -> "OrderLattice":
        rows = [g.coords if isinstance(g, QuaternionElement) else _vec(g) for g in generators]
        H = lat.hnf_rational(rows)
        if len(H) != 4:
            raise PreconditionError(f"lattice has rank {len(H)}, expected 4")
        return cls(tuple(tuple(r) for r in H), alg)

    @property
    def elements(self) -> list[QuaternionElement]:
        return [QuaternionElement(r, self.alg) for r in self.basis]

    @cached_property
    def _basis_inverse(self):
        return lat.inverse([list(r) for r in self.basis])

    def coordinates(self, x: QuaternionElement) -> list[Fraction]:
        inv = self._basis_inverse
        v = x.coords
        return [sum(v[k] * inv[k][j] for k in range(4) if v[k]) for j in range(4)]

    def __contains__(self, x: QuaternionElement) -> bool:
        return all(c.denominator == 1 for c in self.coordinates(x))

    def issubset(self, other: "OrderLattice") -> bool:
        _same(self, other)
        return all(x in other for x in self.elements)

    @property
    def covolume(self) -> Fraction:
        return abs(Fraction(lat.det([list(r) for r in self.basis])))

    def index_in(self, other: "OrderLattice") -> Fraction:
        return self.covolume / other.covolume

    def is_order(self) -> bool:
        if self.alg.one not in self:
            return False
        E = self.elements
        return all(x * y in self for x in E for y in E)

    def gram_trd(self):
        E = self.elements
        return [[(x * y.conj()).trd() for y in E] for x in E]

    def norm_gram(self):
        """Gram matrix of nrd on this lattice's basis."""
        return [[g / 2 for g in row] for row in self.gram_trd()]


def _same(L1, L2):
    if L1.alg != L2.alg:
        raise PreconditionError("lattices live in different presentations")


def hnf(L: OrderLattice) -> OrderLattice:
    return OrderLattice.span(L.alg, L.basis)


def lattice_add(L1: OrderLattice, L2: OrderLattice) -> OrderLattice:
    _same(L1, L2)
    return OrderLattice.span(L1.alg, list(L1.basis) + list(L2.basis))


def _dual_rows(rows):
    inv = lat.inverse([list(r) for r in rows])
    return lat.transpose(inv)


def lattice_intersect(L1: OrderLattice, L2: OrderLattice) -> OrderLattice:
    """(L1^* + L2^*)^* with respect to the coordinate dot product."""
    _same(L1, L2)
    D = lat.hnf_rational(_dual_rows(L1.basis) + _dual_rows(L2.basis))
    return OrderLattice.span(L1.alg, _dual_rows(D))


def lattice_mul(L1: OrderLattice, L2: OrderLattice) -> OrderLattice:
    _same(L1, L2)
    return OrderLattice.span(L1.alg, [x * y for x in L1.elements for y in L2.elements])


def order_disc(O: OrderLattice) -> Fraction:
    """det(trd(b_i conj(b_j)))."""
    d = Fraction(lat.det(O.gram_trd()))
    return int(d) if d.denominator == 1 else d


def reduced_disc(O: OrderLattice) -> int:
    d = order_disc(O)
    n = math.isqrt(int(d)) if d == int(d) and d >= 0 else -1
    if n < 0 or n * n != d:
        raise PreconditionError(f"discriminant {d} is not a square")
    return n


def left_ideal(O: OrderLattice, generators: Sequence[QuaternionElement]) -> OrderLattice:
    if not generators or all(not any(g.coords) for g in generators):
        raise PreconditionError("zero ideal")
    return OrderLattice.span(O.alg, [b * g for b in O.elements for g in generators])


def ideal_norm(I: OrderLattice) -> Fraction:
    """gcd of nrd over I, from the norm form's coefficients on a basis."""
    E = I.elements
    vals = [x.nrd() for x in E]
    for a in range(4):
        for b in range(a + 1, 4):
            vals.append((E[a] + E[b]).nrd() - vals[a] - vals[b])
    L = 1
    for v in vals:
        L = math.lcm(L, Fraction(v).denominator)
    g = 0
    for v in vals:
        g = math.gcd(g, int(Fraction(v) * L))
    return Fraction(g, L)


def _multiplier_order(I: OrderLattice, side: str) -> OrderLattice:
    B = [list(r) for r in I.basis]
    Binv = lat.inverse(B)
    cols = []
    alg = I.alg
    for b in I.elements:
        # M[k] = coords of (b * e_k) or (e_k * b)
        if side == "right":
            M = [alg.mul_coords(b.coords, e.coords) for e in alg.gens]
        else:
            M = [alg.mul_coords(e.coords, b.coords) for e in alg.gens]
        N = lat.mat_mul(M, Binv)
        cols.extend(lat.transpose(N))
    Lam = lat.hnf_rational(cols)
    if len(Lam) != 4:
        raise PreconditionError("degenerate lattice")
    return OrderLattice.span(alg, _dual_rows(Lam))


def right_order(I: OrderLattice) -> OrderLattice:
    """{x : I x in I}."""
    return _multiplier_order(I, "right")


def left_order(I: OrderLattice) -> OrderLattice:
    """{x : x I in I}."""
    return _multiplier_order(I, "left")


# -- orders from forms and from congruence data -----------------------------

def clifford_order(Q: TernaryForm) -> tuple[AlgebraPresentation, OrderLattice]:
    """Even Clifford order Z + Zi + Zj + Zk of an improperly primitive form Q."""
    if not Q.is_positive_definite:
        raise PreconditionError(f"{Q} is not positive definite")
    alg = clifford_presentation(Q)
    O = OrderLattice.span(alg, alg.gens)
    N = ternary_disc(Q)
    if order_disc(O) != N * N:
        raise ContractError(f"disc of Clifford order is {order_disc(O)}, expected {N * N}")
    return alg, O


def check_q(p: int, c: int, q: int):
    if not is_prime(q):
        raise PreconditionError(f"q = {q} is not prime")
    if kronecker(p, q) != -1:
        raise PreconditionError(f"need (p/q) = -1 for p = {p}, q = {q}")
    if c == 2:
        if q % 8 != 7:
            raise PreconditionError("c = 2 needs q = 7 (mod 8)")
    else:
        if q % 8 != 3:
            raise PreconditionError("need q = 3 (mod 8)")
        if c > 1 and kronecker(c, q) != 1:
            raise PreconditionError(f"need (c/q) = 1 for c = {c}, q = {q}")


def _check_pc(p, c):
    if not is_prime(p):
        raise PreconditionError(f"p = {p} is not prime")
    if not (c == 1 or (is_prime(c) and c != p)):
        raise PreconditionError(f"c = {c} must be 1 or a prime different from p")


def _closed_order(alg, gens, expected_disc) -> OrderLattice:
    O = OrderLattice.span(alg, gens)
    if not O.is_order():
        raise ContractError("lattice is not closed under multiplication")
    if order_disc(O) != expected_disc:
        raise ContractError(f"order discriminant {order_disc(O)} != {expected_disc}")
    return O


def eichler_order(p: int, c: int, q: int, r: int) -> OrderLattice:
    """Z + Z(1+i)/2 + Z j(1+i)/2 + Z (r+j) i / q in the standard presentation (i = beta, j = alpha')."""
    _check_pc(p, c)
    check_q(p, c, q)
    if (r * r + c * p) % q:
        raise PreconditionError(f"need r^2 + cp = 0 (mod q), r = {r}")
    alg = standard_presentation(p, c, q)
    one, i, j, k = alg.gens
    gens = [one, (one + i) / 2, j * (one + i) / 2, (r * one + j) * i / q]
    return _closed_order(alg, gens, (c * p) ** 2)


def eichler_order_prime(p: int, c: int, q: int, r: int) -> OrderLattice:
    """Z + Z(1+j)/2 + Z i + Z (r+j) i / (2q), for cp = 3 (mod 4)."""
    _check_pc(p, c)
    check_q(p, c, q)
    if (c * p) % 4 != 3:
        raise PreconditionError("the primed order needs cp = 3 (mod 4)")
    if (r * r + c * p) % (4 * q):
        raise PreconditionError(f"need r'^2 + cp = 0 (mod 4q), r' = {r}")
    alg = standard_presentation(p, c, q)
    one, i, j, k = alg.gens
    gens = [one, (one + j) / 2, i, (r * one + j) * i / (2 * q)]
    return _closed_order(alg, gens, (c * p) ** 2)


def eichler_order_cl2(p: int, c: int, q: int, r: int, ell: int) -> OrderLattice:
    """Level c l^2 suborder Z + Z(1+i)/2 + Z l j(1+i)/2 + Z l (r+j) i / q."""
    _check_pc(p, c)
    check_q(p, c, q)
    if not is_prime(ell) or ell == p:
        raise PreconditionError(f"ell = {ell} must be a prime different from p")
    if (r * r + c * p) % q:
        raise PreconditionError(f"need r^2 + cp = 0 (mod q), r = {r}")
    alg = standard_presentation(p, c, q)
    one, i, j, k = alg.gens
    gens = [one, (one + i) / 2, ell * j * (one + i) / 2, ell * (r * one + j) * i / q]
    return _closed_order(alg, gens, (ell * ell * c * p) ** 2)


def ternary_from_order(O: OrderLattice) -> TernaryForm:
    """Ternary form of N nrd on the trace-zero part of the trace dual, N^2 = disc(O).

    Returned with the same Gram convention as the Clifford input, so the
    diagonal is 2 N nrd and the result is equivalent to Q for O = Clf^0(Q).
    """
    N = reduced_disc(O)
    E = O.elements
    P = [[(x * y).trd() for y in E] for x in E]
    Pinv = lat.inverse(P)
    dual = [sum((Pinv[a][b] * E[b] for b in range(4)), O.alg.one * 0) for a in range(4)]
    traces = [d.trd() for d in dual]
    if any(t.denominator != 1 for t in traces):
        raise ContractError("dual basis has non-integral traces")
    K = lat.integer_kernel([int(t) for t in traces])
    kappa = [sum((row[a] * dual[a] for a in range(4)), O.alg.one * 0) for row in K]
    # Gram of the bilinear form N trd(x conj y); its diagonal is 2 N nrd
    G = [[N * (x * y.conj()).trd() for y in kappa] for x in kappa]
    f = TernaryForm.from_gram(G)
    if ternary_disc(f) != N:
        raise ContractError(f"ternary form {f} has discriminant {ternary_disc(f)}, expected {N}")
    return f


def find_element(O: OrderLattice, trace: int, norm: int):
    """An element of O with the given reduced trace and norm, or None (exhaustive)."""
    G = O.norm_gram()
    E = O.elements
    for v, val in lat.short_vectors(G, norm):
        if val != norm:
            continue
        x = sum((vi * e for vi, e in zip(v, E)), O.alg.one * 0)
        if x.trd() == trace:
            return x
    return None
