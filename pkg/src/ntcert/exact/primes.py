"""Prime-number utilities: deterministic primality, sieves, factorization.

Everything here is desk scale: trial division and a deterministic
Miller-Rabin (valid far beyond 64-bit inputs) are all that is needed.
"""

from __future__ import annotations

from typing import Iterator

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin, exact for n < 3.3e24)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(limit: int) -> list[int]:
    """All primes p <= limit, by sieve of Eratosthenes."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(limit**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i, flag in enumerate(sieve) if flag]


def iter_primes(start: int = 2) -> Iterator[int]:
    """Ascending primes >= start, unbounded."""
    n = max(2, start)
    while True:
        if is_prime(n):
            yield n
        n += 1


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of |n| in ascending order (trial division)."""
    return sorted(factorize(n))


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent} (trial division)."""
    n = abs(n)
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of |n| in ascending order; n must be nonzero."""
    n = abs(n)
    if n == 0:
        raise ValueError("divisors of zero are not defined")
    divs = [1]
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            divs = [a * d**k for a in divs for k in range(e + 1)]
        d += 1 if d == 2 else 2
    if m > 1:
        divs = [a * m**k for a in divs for k in range(2)]
    return sorted(divs)
