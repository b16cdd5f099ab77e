"""Modular arithmetic kernels for prime-square moduli.

Everything here works with a fixed odd prime p < 2**31, so p**2 and
p*(p-1) stay below 2**62.  Python integers make the arithmetic exact
regardless, but the width cap keeps tables and caches in predictable
memory and matches what the scan layer assumes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidArgument, InvalidPrime, NotInvertible
from .primes import factorize, is_prime, smallest_factor_table

try:  # bulk scans are ~4x faster through gmpy2; contract ops stay on pow()
    from gmpy2 import powmod as _gmpy_powmod
except ImportError:  # pragma: no cover
    _gmpy_powmod = None

MAX_PRIME = 1 << 31


def powmod(base: int, exp: int, modulus: int) -> int:
    """base**exp mod modulus with a nonnegative result; exp == 0 gives 1 % modulus."""
    if modulus < 1:
        raise InvalidArgument(f"modulus must be positive, got {modulus}")
    if exp < 0:
        raise InvalidArgument(f"exponent must be nonnegative, got {exp}")
    return pow(base % modulus, exp, modulus)


def invmod(a: int, modulus: int) -> int:
    """Inverse of a mod modulus; raises NotInvertible when gcd(a, modulus) > 1."""
    try:
        return pow(a, -1, modulus)
    except ValueError:
        raise NotInvertible(f"{a} is not invertible modulo {modulus}") from None


def mult_order(a: int, modulus: int, group_order: int,
               group_factors: dict[int, int] | None = None) -> int:
    """Least t >= 1 with a**t == 1 mod modulus.

    group_order must be a multiple of the true order (here p-1 or p*(p-1));
    its factorization may be passed in when the caller already has it.
    """
    if math.gcd(a, modulus) != 1:
        raise NotInvertible(f"gcd({a}, {modulus}) > 1")
    order = group_order
    for q in (group_factors or factorize(group_order)):
        while order % q == 0 and pow(a, order // q, modulus) == 1:
            order //= q
    return order


@dataclass(frozen=True)
class PrimeContext:
    """An odd prime with its cached square and group order.

    A primitive root mod p**2 is only needed for discrete logs, so it is
    looked up lazily through primitive_root().
    """

    p: int
    p2: int
    mod_order: int

    @classmethod
    def create(cls, p: int) -> "PrimeContext":
        if p < 3 or p >= MAX_PRIME or not is_prime(p):
            raise InvalidPrime(f"need an odd prime 3 <= p < 2**31, got {p}")
        return cls(p=p, p2=p * p, mod_order=p * (p - 1))

    def __post_init__(self) -> None:
        if self.p2 != self.p * self.p or self.mod_order != self.p * (self.p - 1):
            raise InvalidArgument("inconsistent PrimeContext fields")


@lru_cache(maxsize=None)
def _context(p: int) -> PrimeContext:
    return PrimeContext.create(p)


def context(p: int) -> PrimeContext:
    """Shared PrimeContext for p (validated once, then cached)."""
    return _context(p)


@lru_cache(maxsize=None)
def primitive_root(p: int) -> int:
    """Smallest g >= 2 of multiplicative order p*(p-1) mod p**2.

    Candidates whose order mod p**2 drops below p*(p-1) -- including
    Fermat-quotient-vanishing bases like 2 for p = 1093 -- are skipped.
    """
    ctx = context(p)
    factors = list(factorize(ctx.mod_order))
    g = 2
    while True:
        if all(pow(g, ctx.mod_order // q, ctx.p2) != 1 for q in factors):
            return g
        g += 1


def is_pth_power(ctx: PrimeContext, x: int) -> bool:
    """True iff x is a nonzero p-th power mod p**2 (x**(p-1) == 1)."""
    if x % ctx.p == 0:
        return False
    return pow(x, ctx.p - 1, ctx.p2) == 1


def pth_power_lift(ctx: PrimeContext, x: int) -> int:
    """The unique y mod p**2 with y == x mod p and y a p-th power mod p**2."""
    return pow(x % ctx.p2, ctx.p, ctx.p2)


@dataclass(frozen=True)
class PthPowerTable:
    """powers[x] = x**p mod p**2 for 1 <= x <= p-1 (powers[0] = 0)."""

    ctx: PrimeContext
    powers: tuple[int, ...]

    def __getitem__(self, x: int) -> int:
        return self.powers[x]


def pth_power_table(ctx: PrimeContext, spf: list[int] | None = None) -> PthPowerTable:
    """Build the full p-th power table in O(p) multiplications.

    x -> x**p is multiplicative over the integers, so only prime x need a
    real exponentiation: composite x = q*y (q = smallest prime factor)
    reuse powers[q] * powers[y] mod p**2.
    """
    values = _power_table_list(ctx.p, ctx.p2, spf)
    return PthPowerTable(ctx=ctx, powers=tuple(values))


_SPF_CACHE: list[int] = []


def _shared_spf(limit: int) -> list[int]:
    """Process-wide smallest-prime-factor table, grown geometrically."""
    global _SPF_CACHE
    if len(_SPF_CACHE) < limit:
        _SPF_CACHE = smallest_factor_table(max(limit, 2 * len(_SPF_CACHE), 1 << 12))
    return _SPF_CACHE


def _power_table_list(p: int, p2: int, spf: list[int] | None = None) -> list[int]:
    if spf is None:
        spf = _shared_spf(p) if p > 2 else [0, 1]
    s = [0] * p
    if p > 1:
        s[1] = 1
    pw = _gmpy_powmod if _gmpy_powmod is not None else pow
    for x in range(2, p):
        q = spf[x]
        if q == x:
            s[x] = int(pw(x, p, p2))
        else:
            s[x] = s[q] * s[x // q] % p2
    return s
