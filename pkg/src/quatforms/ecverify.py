"""Small-field elliptic curve checks: F_p and F_p^2 arithmetic, j-invariants,
naive point counts and the class-number-one Hilbert class polynomials."""

from __future__ import annotations

from dataclasses import dataclass

from .arith import is_prime, kronecker
from .errors import PreconditionError

NAIVE_COUNT_LIMIT = 10**6

# H_D(X) = X - j(D) for the nine discriminants of class number one
HILBERT_CONSTANT_TERMS = {
    -3: 0,
    -4: -1728,
    -7: 3375,
    -8: -8000,
    -11: 32768,
    -19: 884736,
    -43: 884736000,
    -67: 147197952000,
    -163: 262537412640768000,
}


@dataclass(frozen=True)
class Fp2:
    """F_p(sqrt(s)) for a quadratic non-residue s."""

    p: int
    s: int

    def __post_init__(self):
        if not is_prime(self.p) or self.p == 2:
            raise PreconditionError(f"p = {self.p} must be an odd prime")
        if kronecker(self.s, self.p) != -1:
            raise PreconditionError(f"{self.s} is a square mod {self.p}")

    @classmethod
    def smallest(cls, p: int) -> "Fp2":
        s = 2
        while kronecker(s, p) != -1:
            s += 1
        return cls(p, s)

    def __call__(self, c0: int, c1: int = 0) -> "Fp2Element":
        return Fp2Element(c0 % self.p, c1 % self.p, self)

    @property
    def gen(self) -> "Fp2Element":
        return self(0, 1)


@dataclass(frozen=True)
class Fp2Element:
    c0: int
    c1: int
    field: Fp2

    def _coerce(self, other) -> "Fp2Element":
        if isinstance(other, Fp2Element):
            if other.field != self.field:
                raise PreconditionError("elements of different fields")
            return other
        return self.field(int(other))

    def __add__(self, other):
        o = self._coerce(other)
        return self.field(self.c0 + o.c0, self.c1 + o.c1)

    __radd__ = __add__

    def __neg__(self):
        return self.field(-self.c0, -self.c1)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        s = self.field.s
        return self.field(self.c0 * o.c0 + s * self.c1 * o.c1, self.c0 * o.c1 + self.c1 * o.c0)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def norm(self) -> int:
        return (self.c0 * self.c0 - self.field.s * self.c1 * self.c1) % self.field.p

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        ninv = pow(n, -1, self.field.p)
        return self.field(self.c0 * ninv, -self.c1 * ninv)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def frobenius(self):
        return self.field(self.c0, -self.c1)

    def is_zero(self) -> bool:
        return self.c0 == 0 and self.c1 == 0

    def __eq__(self, other):
        if isinstance(other, int):
            return self.c1 == 0 and (self.c0 - other) % self.field.p == 0
        return isinstance(other, Fp2Element) and (self.c0, self.c1, self.field) == (other.c0, other.c1, other.field)

    def __hash__(self):
        return hash((self.c0, self.c1, self.field))

    def __str__(self):
        if self.c1 == 0:
            return str(self.c0)
        return f"{self.c1}*a + {self.c0}" if self.c0 else f"{self.c1}*a"


@dataclass(frozen=True)
class CurveModel:
    """y^2 = x^3 + a x + b over F_p (ints) or F_p^2 (Fp2Element coefficients)."""

    a: object
    b: object
    p: int

    def __post_init__(self):
        if not is_prime(self.p) or self.p <= 3:
            raise PreconditionError(f"p = {self.p} must be a prime > 3")
        if _is_zero(self._disc_part(), self.p):
            raise PreconditionError("singular curve: 4a^3 + 27b^2 = 0")

    @property
    def over_fp(self) -> bool:
        return not isinstance(self.a, Fp2Element) and not isinstance(self.b, Fp2Element)

    def _disc_part(self):
        return 4 * _cube(self.a, self.p) + 27 * _square(self.b, self.p)

    def frobenius_conjugate(self) -> "CurveModel":
        conjugate = lambda x: x.frobenius() if isinstance(x, Fp2Element) else x
        return CurveModel(conjugate(self.a), conjugate(self.b), self.p)


def _is_zero(x, p) -> bool:
    return x.is_zero() if isinstance(x, Fp2Element) else x % p == 0


def _cube(x, p):
    return x * x * x if isinstance(x, Fp2Element) else pow(x, 3, p)


def _square(x, p):
    return x * x if isinstance(x, Fp2Element) else x * x % p


def j_invariant(E: CurveModel):
    """1728 * 4a^3 / (4a^3 + 27b^2)."""
    num = 1728 * 4 * _cube(E.a, E.p)
    den = E._disc_part()
    if isinstance(num, Fp2Element) or isinstance(den, Fp2Element):
        if not isinstance(den, Fp2Element):
            den = num.field(den)
        return num / den
    return num * pow(den % E.p, -1, E.p) % E.p


def count_points(E: CurveModel) -> int:
    """#E(F_p) by summing Legendre symbols (curve must be defined over F_p)."""
    if not E.over_fp:
        raise PreconditionError("naive counting is only implemented over F_p")
    p = E.p
    if p > NAIVE_COUNT_LIMIT:
        raise PreconditionError(f"p = {p} exceeds the naive counting budget {NAIVE_COUNT_LIMIT}")
    a, b = E.a % p, E.b % p
    total = p + 1
    for x in range(p):
        total += kronecker((x * x * x + a * x + b) % p, p)
    return total


def is_supersingular(E: CurveModel) -> bool:
    """Over F_p with p > 3 the trace divisible by p means #E = p + 1."""
    return count_points(E) == E.p + 1


def hilbert_root(D: int, p: int) -> int:
    """Root mod p of the degree-one Hilbert class polynomial of discriminant D < 0."""
    if D not in HILBERT_CONSTANT_TERMS:
        raise PreconditionError(f"D = {D} is not a class-number-one discriminant in the table")
    if not is_prime(p):
        raise PreconditionError(f"p = {p} is not prime")
    return -HILBERT_CONSTANT_TERMS[D] % p


def curve_with_j(j: int, p: int) -> CurveModel:
    """A curve over F_p with the given j-invariant."""
    j %= p
    if j == 0:
        return CurveModel(0, 1, p)
    if j == 1728 % p:
        return CurveModel(1, 0, p)
    k = j * pow(1728 - j, -1, p) % p
    return CurveModel(3 * k % p, 2 * k % p, p)
