"""Integer number theory: Kronecker symbols, primality, modular square roots."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .errors import PreconditionError

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for every n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n)."""
    if n == 0:
        raise PreconditionError("kronecker symbol undefined for n = 0")
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 and a % 8 in (3, 5):
            result = -result
    # Jacobi symbol (a/n), n odd positive
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _tonelli_shanks(a: int, p: int) -> int:
    # a is a nonzero quadratic residue mod the odd prime p
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    if s == 1:
        return pow(a, (p + 1) // 4, p)
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def sqrt_mod_prime(a: int, p: int) -> int | None:
    """Square root of a modulo the prime p, the smaller of the two roots.

    Returns None when a is a non-residue.
    """
    if not is_prime(p):
        raise PreconditionError(f"sqrt_mod_prime needs a prime modulus, got {p}")
    a %= p
    if a == 0:
        return 0
    if p == 2:
        return 1
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    r = _tonelli_shanks(a, p)
    return min(r, p - r)


@dataclass(frozen=True)
class FactoredModulus:
    modulus: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise PreconditionError("modulus must be positive")
        seen = set()
        prod = 1
        for p, e in self.factors:
            if e < 1 or p in seen or not is_prime(p):
                raise PreconditionError(f"bad factorization entry {p}^{e}")
            seen.add(p)
            prod *= p**e
        if prod != self.modulus:
            raise PreconditionError(
                f"factorization {self.factors} does not multiply to {self.modulus}"
            )

    @classmethod
    def of(cls, *primes: int) -> "FactoredModulus":
        """Build from a multiset of primes, e.g. ``of(2, 2, 7)`` for 28."""
        counts: dict[int, int] = {}
        for p in primes:
            if p != 1:
                counts[p] = counts.get(p, 0) + 1
        factors = tuple(sorted(counts.items()))
        return cls(math.prod(p**e for p, e in factors), factors)

    @classmethod
    def from_factors(cls, factors) -> "FactoredModulus":
        factors = tuple(sorted((int(p), int(e)) for p, e in factors))
        return cls(math.prod(p**e for p, e in factors), factors)


def _sqrt_unit_prime_power(a: int, p: int, e: int) -> list[int]:
    # all roots of x^2 = a mod p^e with gcd(a, p) = 1
    m = p**e
    if p == 2:
        roots = [1]
        for k in range(1, e):
            mk = 1 << (k + 1)
            roots = sorted({x % mk for r in roots for x in (r, r + (1 << k)) if (x * x - a) % mk == 0})
        return roots if all((r * r - a) % m == 0 for r in roots) else []
    r = sqrt_mod_prime(a, p)
    if r is None:
        return []
    pk = p
    for _ in range(1, e):
        pk *= p
        # Hensel step
        r = (r - (r * r - a) * pow(2 * r, -1, pk)) % pk
    return sorted({r % m, (-r) % m})


def _sqrt_prime_power(a: int, p: int, e: int) -> list[int]:
    m = p**e
    a %= m
    if a == 0:
        step = p ** ((e + 1) // 2)
        return list(range(0, m, step))
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    if v % 2:
        return []
    k = v // 2
    # x = p^k y, y^2 = a mod p^(e-2k); y is only needed mod p^(e-k)
    base = _sqrt_unit_prime_power(a, p, e - v)
    inner = p ** (e - v)
    out = set()
    for y in base:
        for t in range(p**k):
            out.add((p**k * (y + t * inner)) % m)
    return sorted(out)


def sqrt_mod_all(a: int, m: FactoredModulus) -> list[int]:
    """Every residue r in [0, m) with r^2 = a (mod m)."""
    per_prime = []
    for p, e in m.factors:
        roots = _sqrt_prime_power(a, p, e)
        if not roots:
            return []
        per_prime.append((p**e, roots))
    out = []
    for combo in product(*(roots for _, roots in per_prime)):
        x, mod = 0, 1
        for (pe, _), r in zip(per_prime, combo):
            # CRT merge
            x = x + mod * ((r - x) * pow(mod, -1, pe) % pe)
            mod *= pe
        out.append(x % m.modulus)
    return sorted(out)


def sqrt_mod(a: int, m: FactoredModulus) -> list[int]:
    """Square roots of a modulo m, one per pair {r, m - r}, each in [0, m/2]."""
    if m.modulus < 2:
        raise PreconditionError("sqrt_mod needs a modulus >= 2")
    n = m.modulus
    return sorted({min(r, n - r) for r in sqrt_mod_all(a, m)})
