"""Prime generation and deterministic primality testing.

Primality is deterministic over the whole supported range: trial division
below 2**16, a fixed Miller-Rabin witness set above (valid far beyond 2**64).
Bulk prime enumeration uses a numpy segmented sieve so that ranges up to
2 * 10**9 stay affordable.
"""

from __future__ import annotations

import math
from typing import Iterator

import numpy as np

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Deterministic Miller-Rabin witnesses for n < 3.3 * 10**24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test for n < 3.3 * 10**24."""
    if n < 2:
        return False
    if n < 1 << 16:
        for p in _SMALL_PRIMES:
            if n == p:
                return True
            if n % p == 0:
                return False
        f = 41
        while f * f <= n:
            if n % f == 0:
                return False
            f += 2
        return True
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
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


def simple_sieve(limit: int) -> np.ndarray:
    """All primes <= limit as an int64 array."""
    if limit < 2:
        return np.array([], dtype=np.int64)
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.flatnonzero(mask).astype(np.int64)


def primes_in_range(lo: int, hi: int, segment: int = 1 << 22) -> Iterator[np.ndarray]:
    """Yield int64 arrays jointly holding every prime p with lo <= p < hi."""
    lo = max(lo, 2)
    if hi <= lo:
        return
    base = simple_sieve(math.isqrt(hi - 1))
    start = lo
    while start < hi:
        end = min(start + segment, hi)
        mask = np.ones(end - start, dtype=bool)
        if start <= 1:
            mask[: 2 - start] = False
        for p in base.tolist():
            first = max(p * p, (start + p - 1) // p * p)
            if first >= end:
                continue
            mask[first - start :: p] = False
        seg = np.flatnonzero(mask)
        if seg.size:
            yield (seg + start).astype(np.int64)
        start = end


def primes_list(lo: int, hi: int) -> list[int]:
    """Primes in [lo, hi) as a plain list."""
    out: list[int] = []
    for block in primes_in_range(lo, hi):
        out.extend(block.tolist())
    return out


def nth_primes(count: int) -> list[int]:
    """The first `count` primes, starting from 2."""
    if count <= 0:
        return []
    # Over-allocate with the usual p_n bound, then trim.
    if count < 6:
        limit = 16
    else:
        limit = int(count * (math.log(count) + math.log(math.log(count)))) + 16
    primes = simple_sieve(limit).tolist()
    while len(primes) < count:
        limit *= 2
        primes = simple_sieve(limit).tolist()
    return primes[:count]


def smallest_factor_table(limit: int) -> list[int]:
    """spf[x] = smallest prime factor of x, for 0 <= x < limit."""
    spf = list(range(limit))
    for i in range(2, math.isqrt(limit - 1) + 1):
        if spf[i] == i:
            for j in range(i * i, limit, i):
                if spf[j] == j:
                    spf[j] = i
    return spf


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; callers keep n's factors small."""
    factors: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    f = 7
    while f * f <= n:
        while n % f == 0:
            factors[f] = factors.get(f, 0) + 1
            n //= f
        f += 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors
