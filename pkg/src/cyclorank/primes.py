"""Primality and small-factor utilities used throughout the package."""

from __future__ import annotations

from functools import lru_cache

from .errors import ParameterError

# Deterministic Miller-Rabin witnesses for n < 3.3 * 10**24; moduli in this
# package stay far below that.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == q:
            return True
        if n % q == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = (x * x) % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_odd_prime(n: int) -> bool:
    return n % 2 == 1 and is_prime(n)


def require_odd_prime(n: int, name: str = "p") -> int:
    if not isinstance(n, int) or not is_odd_prime(n):
        raise ParameterError(f"{name} must be an odd prime, got {n!r}")
    return n


def primes_in_range(lo: int, hi: int) -> list[int]:
    """All primes q with lo <= q <= hi, ascending (sieve of Eratosthenes)."""
    if hi < max(lo, 2):
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0:2] = b"\x00\x00"
    for q in range(2, int(hi**0.5) + 1):
        if sieve[q]:
            sieve[q * q :: q] = bytearray(len(range(q * q, hi + 1, q)))
    return [q for q in range(max(lo, 2), hi + 1) if sieve[q]]


def odd_primes_in_range(lo: int, hi: int) -> list[int]:
    return [q for q in primes_in_range(max(lo, 3), hi) if q % 2 == 1]


def distinct_prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n by trial division; n stays small here."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out
