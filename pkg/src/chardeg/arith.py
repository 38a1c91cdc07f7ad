"""Exact integer arithmetic.

Primality, factorization, multiplicative orders, and the least prime /
prime-power searches in arithmetic progressions that drive the minimal-order
computations.  All functions are deterministic; the Miller-Rabin witness set
used here is exact for every 64-bit input, and the searches scan residue
classes in increasing value so returned minima are true minima.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NotCoprime, SearchExhausted

__all__ = [
    "is_prime",
    "Factorization",
    "factor",
    "euler_phi",
    "multiplicative_order",
    "PrimePower",
    "prime_power_decomposition",
    "least_prime_power_1mod",
    "least_prime_1mod",
    "kanold_holds",
    "psl2_order",
    "is_cyclic_number",
    "primes_up_to",
]

# Sufficient for a deterministic test of every n < 3.3e24 (so all 64-bit n).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SEARCH_CAP = 2**63


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = ((d & -d).bit_length()) - 1
    d >>= s
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ((prime, exponent), ...) with primes ascending."""

    factors: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out


def _pollard_rho(n: int) -> int:
    """Brent-cycle Pollard rho; returns a nontrivial factor of composite odd n."""
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise SearchExhausted(f"pollard rho failed on {n}")


def factor(n: int) -> Factorization:
    """Trial division with a rho fallback for large cofactors."""
    if n < 1:
        raise ValueError("factor() needs n >= 1")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    # 6k +- 1 wheel up to 1e5; acceptance workloads stay below 1e10 so the
    # remaining cofactor is prime, a prime square, or a semiprime for rho.
    d = 7
    step = 4
    while d * d <= n and d < 100_000:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += step
        step = 6 - step
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack.extend((r, r))
            continue
        f = _pollard_rho(m)
        stack.extend((f, m // f))
    return Factorization(tuple(sorted(out.items())))


def euler_phi(n: int) -> int:
    out = 1
    for p, e in factor(n).factors:
        out *= (p - 1) * p ** (e - 1)
    return out


def multiplicative_order(a: int, n: int) -> int:
    """Least k >= 1 with a**k = 1 (mod n)."""
    if n < 1:
        raise ValueError("modulus must be >= 1")
    if n == 1:
        return 1
    if math.gcd(a, n) != 1:
        raise NotCoprime(f"{a} is not a unit mod {n}")
    order = euler_phi(n)
    for p, _ in factor(order).factors:
        while order % p == 0 and pow(a, order // p, n) == 1:
            order //= p
    return order


@dataclass(frozen=True)
class PrimePower:
    q: int
    m: int

    @property
    def value(self) -> int:
        return self.q**self.m


def _nth_root(v: int, m: int) -> int:
    """Floor of the m-th root of v."""
    if m == 1:
        return v
    r = int(round(v ** (1.0 / m)))
    while r**m > v:
        r -= 1
    while (r + 1) ** m <= v:
        r += 1
    return r


def prime_power_decomposition(v: int) -> PrimePower | None:
    """(q, m) with v = q**m and q prime, or None."""
    if v < 2:
        return None
    if is_prime(v):
        return PrimePower(v, 1)
    for m in range(2, v.bit_length() + 1):
        r = _nth_root(v, m)
        if r < 2:
            break
        if r**m == v and is_prime(r):
            return PrimePower(r, m)
    return None


def least_prime_power_1mod(n: int) -> PrimePower:
    """Smallest prime power q**m with q**m = 1 (mod n), scanned by value."""
    if n < 2:
        raise ValueError("least_prime_power_1mod needs n >= 2")
    v = n + 1
    while v < _SEARCH_CAP:
        pp = prime_power_decomposition(v)
        if pp is not None:
            return pp
        v += n
    raise SearchExhausted(f"no prime power = 1 mod {n} below 2**63")


def least_prime_1mod(n: int) -> int:
    """Smallest prime q with q = 1 (mod n)."""
    if n < 2:
        raise ValueError("least_prime_1mod needs n >= 2")
    v = n + 1
    while v < _SEARCH_CAP:
        if is_prime(v):
            return v
        v += n
    raise SearchExhausted(f"no prime = 1 mod {n} below 2**63")


def kanold_holds(p: int) -> bool:
    """Whether the least prime q = 1 (mod p) satisfies q < p**2."""
    return least_prime_1mod(p) < p * p


def psl2_order(p: int) -> int:
    """|PSL2(p)| = p(p^2-1)/gcd(2, p-1)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return p * (p * p - 1) // math.gcd(2, p - 1)


def is_cyclic_number(m: int) -> bool:
    """True iff every group of order m is cyclic, i.e. gcd(m, phi(m)) = 1."""
    if m < 1:
        raise ValueError("is_cyclic_number needs m >= 1")
    return math.gcd(m, euler_phi(m)) == 1


def primes_up_to(n: int) -> list[int]:
    """Sieve of Eratosthenes, inclusive."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i in range(2, n + 1) if sieve[i]]
