"""Exact integer arithmetic: factorization, totient, divisors, gcd."""

from __future__ import annotations

import math
from dataclasses import dataclass

INT64_MAX = 2**63 - 1


def _check_int(value: int, name: str = "n") -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    if value > INT64_MAX:
        raise OverflowError(f"{name}={value} exceeds the 64-bit limit")
    return value


@dataclass(frozen=True)
class Factorization:
    """Prime-power decomposition of ``n``, primes ascending."""

    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    @property
    def simple_primes(self) -> list[int]:
        """Primes dividing ``n`` exactly once."""
        return [p for p, k in self.factors if k == 1]

    @property
    def m(self) -> int:
        return len(self.simple_primes)

    @property
    def r(self) -> int:
        return sum(1 for _, k in self.factors if k >= 2)

    @property
    def is_prime(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1

    def product(self) -> int:
        out = 1
        for p, k in self.factors:
            out *= p**k
        return out

    def as_lists(self) -> list[list[int]]:
        return [[p, k] for p, k in self.factors]


def factorize(n: int) -> Factorization:
    """Trial division up to sqrt(n).

    >>> factorize(360).factors
    ((2, 3), (3, 2), (5, 1))
    """
    _check_int(n)
    if n < 2:
        raise ValueError(f"factorize requires n >= 2, got {n}")
    factors = []
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            k = 0
            while rest % p == 0:
                rest //= p
                k += 1
            factors.append((p, k))
        p += 1 if p == 2 else 2
    if rest > 1:
        factors.append((rest, 1))
    return Factorization(n, tuple(factors))


def totient(n: int) -> int:
    _check_int(n)
    if n < 1:
        raise ValueError(f"totient requires n >= 1, got {n}")
    if n == 1:
        return 1
    out = n
    for p, _ in factorize(n).factors:
        out = out // p * (p - 1)
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n`` in increasing order."""
    _check_int(n)
    if n < 1:
        raise ValueError(f"divisors requires n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def proper_divisors(n: int) -> list[int]:
    """Divisors ``d`` with ``1 < d < n``."""
    _check_int(n)
    if n < 2:
        raise ValueError(f"proper_divisors requires n >= 2, got {n}")
    return divisors(n)[1:-1]


def gcd(a: int, b: int) -> int:
    _check_int(a, "a")
    _check_int(b, "b")
    if a < 0 or b < 0:
        raise ValueError("gcd arguments must be nonnegative")
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n).is_prime
