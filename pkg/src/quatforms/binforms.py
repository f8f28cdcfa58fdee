"""Positive definite integral binary quadratic forms ax^2 + bxy + cy^2."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import count

from .arith import FactoredModulus, is_prime, kronecker, sqrt_mod
from .errors import ContractError, PreconditionError


@dataclass(frozen=True, order=True)
class BinaryForm:
    a: int
    b: int
    c: int

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def __call__(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def __str__(self):
        return f"({self.a},{self.b},{self.c})"

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def content(self) -> int:
        return math.gcd(self.a, self.b, self.c)

    @property
    def is_primitive(self) -> bool:
        return self.content == 1

    @property
    def is_positive_definite(self) -> bool:
        return self.disc < 0 and self.a > 0

    def transform(self, U) -> "BinaryForm":
        """The form (x, y) -> f(U (x, y)^t)."""
        (p, q), (r, s) = U
        a, b, c = self.a, self.b, self.c
        return BinaryForm(
            a * p * p + b * p * r + c * r * r,
            2 * a * p * q + b * (p * s + q * r) + 2 * c * r * s,
            a * q * q + b * q * s + c * s * s,
        )


def disc(f: BinaryForm) -> int:
    return f.disc


def principal_form(d: int) -> BinaryForm:
    """The identity of the class group of discriminant d < 0."""
    if d >= 0 or d % 4 not in (0, 1):
        raise PreconditionError(f"{d} is not a negative discriminant")
    if d % 4 == 0:
        return BinaryForm(1, 0, -d // 4)
    return BinaryForm(1, 1, (1 - d) // 4)


def _mul2(A, B):
    return ((A[0][0] * B[0][0] + A[0][1] * B[1][0], A[0][0] * B[0][1] + A[0][1] * B[1][1]),
            (A[1][0] * B[0][0] + A[1][1] * B[1][0], A[1][0] * B[0][1] + A[1][1] * B[1][1]))


def is_reduced(f: BinaryForm) -> bool:
    a, b, c = f
    if not (abs(b) <= a <= c):
        return False
    if (abs(b) == a or a == c) and b < 0:
        return False
    return True


def reduce(f: BinaryForm) -> tuple[BinaryForm, tuple]:
    """Gauss reduction. Returns (g, U) with g = f.transform(U), det U = 1."""
    if not f.is_positive_definite:
        raise PreconditionError(f"reduce needs a positive definite form, got {f}")
    U = ((1, 0), (0, 1))
    g = f
    while True:
        a, b, c = g
        # size-reduce b into (-a, a]
        k = (a - b) // (2 * a)
        if k:
            T = ((1, k), (0, 1))
            g, U = g.transform(T), _mul2(U, T)
            a, b, c = g
        if a > c or (a == c and b < 0):
            S = ((0, -1), (1, 0))
            g, U = g.transform(S), _mul2(U, S)
            continue
        break
    if g.b < 0 and (-g.b == g.a or g.a == g.c):
        # (a, -a, c) ~ (a, a, c) and (a, -b, a) ~ (a, b, a)
        T = ((1, 1), (0, 1)) if -g.b == g.a else ((0, -1), (1, 0))
        g, U = g.transform(T), _mul2(U, T)
    assert is_reduced(g), g
    return g, U


def reduced(f: BinaryForm) -> BinaryForm:
    return reduce(f)[0]


def _check_same_disc(f: BinaryForm, g: BinaryForm):
    if f.disc != g.disc:
        raise PreconditionError(f"discriminant mismatch: {f.disc} vs {g.disc}")
    if not (f.is_primitive and g.is_primitive):
        raise PreconditionError("composition needs primitive forms")


def compose(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Dirichlet composition followed by reduction."""
    _check_same_disc(f, g)
    a1, b1, c1 = f
    a2, b2, c2 = g
    if a1 > a2:
        a1, b1, c1, a2, b2, c2 = a2, b2, c2, a1, b1, c1
    s = (b1 + b2) // 2
    n = b2 - s
    if a2 % a1 == 0:
        y1, d = 0, a1
    else:
        d, u, _ = _xgcd(a2, a1)
        y1 = u
    if s % d == 0:
        y2, x2, d1 = -1, 0, d
    else:
        d1, u, v = _xgcd(s, d)
        x2, y2 = u, -v
    v1 = a1 // d1
    v2 = a2 // d1
    r = (y1 * y2 * n - x2 * c2) % v1
    b3 = b2 + 2 * v2 * r
    a3 = v1 * v2
    c3 = (c2 * d1 + r * (b2 + v2 * r)) // v1
    h = BinaryForm(a3, b3, c3)
    if h.disc != f.disc:
        raise ContractError(f"composition of {f} and {g} produced {h}")
    return reduced(h)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, u, v) with u a + v b = g = gcd(a, b) >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def inverse(f: BinaryForm) -> BinaryForm:
    if not f.is_primitive:
        raise PreconditionError("inverse needs a primitive form")
    return reduced(BinaryForm(f.a, -f.b, f.c))


def power(f: BinaryForm, k: int) -> BinaryForm:
    """k-fold composition, square-and-multiply."""
    if k < 0:
        raise PreconditionError("power needs k >= 0")
    if not f.is_primitive:
        raise PreconditionError("power needs a primitive form")
    result = principal_form(f.disc)
    base = reduced(f)
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


# -- representation ---------------------------------------------------------

def representations(f: BinaryForm, n: int, proper_only: bool = False):
    """Yield every (x, y) with f(x, y) = n, in a fixed order (y = 0, 1, -1, 2, ...)."""
    if not f.is_positive_definite:
        raise PreconditionError("representation search needs a positive definite form")
    if n <= 0:
        return
    a, b, c = f
    D = -f.disc
    ymax = math.isqrt(4 * a * n // D)
    for yabs in range(ymax + 1):
        for y in ((yabs, -yabs) if yabs else (0,)):
            # a x^2 + b y x + (c y^2 - n) = 0
            rad = 4 * a * n - D * y * y
            if rad < 0:
                continue
            s = math.isqrt(rad)
            if s * s != rad:
                continue
            for num in sorted({-b * y + s, -b * y - s}, reverse=True):
                if num % (2 * a) == 0:
                    x = num // (2 * a)
                    if proper_only and math.gcd(x, y) != 1:
                        continue
                    yield x, y


def represents(f: BinaryForm, n: int, proper_only: bool = False) -> tuple[int, int] | None:
    """A witness (x, y) with f(x, y) = n, or None; the search is exhaustive."""
    return next(representations(f, n, proper_only), None)


def coprime_value(f: BinaryForm, m: int, bound: int = 200):
    """A represented value n with gcd(n, m) = 1, plus a primitive witness."""
    for r in range(1, bound + 1):
        for x in range(-r, r + 1):
            for y in (r - abs(x), -(r - abs(x))):
                if math.gcd(x, y) != 1:
                    continue
                n = f(x, y)
                if n != 0 and math.gcd(n, m) == 1:
                    return n, (x, y)
    raise PreconditionError(f"no value of {f} coprime to {m} within bound {bound}")


# -- genus theory -----------------------------------------------------------

@dataclass(frozen=True)
class GenusClass:
    chi1: int
    chi2: int | None = None
    delta: int | None = None

    def as_tuple(self):
        return tuple(x for x in (self.chi1, self.chi2, self.delta) if x is not None)


def genus_of_value(n: int, p: int, c: int, with_delta: bool) -> GenusClass:
    return GenusClass(
        chi1=kronecker(n, p),
        chi2=kronecker(n, c) if c > 1 else None,
        delta=(-1) ** ((n - 1) // 2 % 2) if with_delta else None,
    )


def genus_characters(f: BinaryForm, p: int, c: int = 1, bound: int = 200, value: int | None = None) -> GenusClass:
    """Assigned characters of f for discriminant -16cp (or -cp)."""
    if f.disc not in (-16 * c * p, -c * p):
        raise PreconditionError(f"{f} has discriminant {f.disc}, expected -16cp or -cp")
    if value is None:
        value, _ = coprime_value(f, 2 * c * p, bound)
    return genus_of_value(value, p, c, f.disc % 2 == 0)


# -- derived forms ----------------------------------------------------------

def derive(f: BinaryForm, ell: int, h: int) -> BinaryForm:
    """Image of f under L_h = [[ell, h], [0, 1]] (h < ell) or L_ell = diag(1, ell)."""
    if not 0 <= h <= ell:
        raise PreconditionError(f"h must lie in [0, {ell}]")
    a, b, c = f
    if h == ell:
        return BinaryForm(a, b * ell, c * ell * ell)
    return BinaryForm(a * ell * ell, ell * (b + 2 * a * h), a * h * h + b * h + c)


def derived_symbol(f: BinaryForm, ell: int) -> int:
    """(-n/ell) for any value n of f prime to ell; 0 if every value is divisible by ell."""
    if f.disc % (ell * ell):
        raise PreconditionError("derived_symbol needs ell^2 | disc")
    if f.content % ell == 0:
        return 0
    # a primitive-at-ell form takes a value prime to ell at one of these points
    for x, y in ((1, 0), (0, 1), (1, 1)):
        n = f(x, y)
        if n % ell:
            return kronecker(-n, ell)
    return 0


def derived_forms(f: BinaryForm, ell: int) -> list[tuple[int, BinaryForm]]:
    return [(h, derive(f, ell, h)) for h in range(ell + 1)]


def admissible_derived_forms(f: BinaryForm, ell: int) -> list[tuple[int, BinaryForm]]:
    """Primitive derived forms whose derived symbol is +1."""
    return [(h, g) for h, g in derived_forms(f, ell) if g.is_primitive and derived_symbol(g, ell) == 1]


def expected_admissible_count(f: BinaryForm, ell: int) -> int:
    return (ell - kronecker(f.disc, ell)) // 2


# -- forms from imaginary quadratic embeddings ------------------------------

def form_from_embedding(p: int, c: int, D: int, embedding_disc: int) -> BinaryForm:
    """Binary form of discriminant -16cp attached to an embedding of disc -D or -4D."""
    # D = 1 with disc -4 (the Gaussian order, j = 1728) is the one non-prime case admitted
    gaussian = D == 1 and embedding_disc == -4
    if not is_prime(p) or not (is_prime(D) or gaussian) or not (c == 1 or is_prime(c)):
        raise PreconditionError("p and D must be prime (or D = 1 with disc -4), c prime or 1")
    if embedding_disc == -D:
        if D % 4 != 3:
            raise PreconditionError(f"disc -D needs D = 3 mod 4, got D = {D}")
        if not D < p:
            raise PreconditionError(f"disc -D needs D < p ({D} >= {p})")
        modulus = FactoredModulus.of(2, 2, D)
        lead = D
    elif embedding_disc == -4 * D:
        if not 4 * D < p:
            raise PreconditionError(f"disc -4D needs 4D < p ({4 * D} >= {p})")
        modulus = FactoredModulus.of(2, 2, 2, 2, D)
        lead = 4 * D
    else:
        raise PreconditionError("embedding_disc must be -D or -4D")
    target = -16 * c * p
    roots = sqrt_mod(target, modulus)
    if not roots:
        raise PreconditionError(
            f"x^2 = {target} (mod {modulus.modulus}) has no solution: no embedding of disc {embedding_disc}"
        )
    candidates = [BinaryForm(lead, x, (x * x - target) // modulus.modulus) for x in roots]
    # with disc -4D and D = 3 (mod 4) there are two root pairs; only one gives an
    # improperly primitive reciprocal
    for rho in candidates:
        if embedding_form_admissible(rho, c):
            return rho
    raise PreconditionError(
        f"no root of x^2 = {target} (mod {modulus.modulus}) gives a form outside the principal genus: "
        f"{', '.join(map(str, candidates))}"
    )


def embedding_form_admissible(rho: BinaryForm, c: int) -> bool:
    """Whether rho (disc -16cp) has a ternary representation with improperly primitive reciprocal.

    Either rho is primitive and its odd values are 3 mod 4 (7 mod 8 when
    c = 2), or rho = 4 rho' with rho' primitive and t = 2 (mod 4).
    """
    g = rho.content
    if g == 4:
        return rho.b % 8 == 4 and BinaryForm(rho.a // 4, rho.b // 4, rho.c // 4).is_primitive
    if g != 1:
        return False
    n, _ = coprime_value(rho, 2)
    return n % 8 == 7 if c == 2 else n % 4 == 3
