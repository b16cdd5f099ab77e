"""Roots of ((x+1)**p - x**p - 1)/p mod p and their orbit structure.

A residue x is a root exactly when x**p and (x+1)**p are consecutive
mod p**2, so the root list doubles as an index of consecutive p-th power
pairs.  Roots are preserved by x -> -x-1 and x -> 1/x, which generate a
six-element group; apart from three degenerate orbits the roots therefore
come in "six-packs".
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .errors import InvalidPrime, OrbitDecompositionFailure
from .modarith import context, invmod, pth_power_lift, _power_table_list

try:
    from gmpy2 import powmod_base_list as _powmod_base_list
except ImportError:  # pragma: no cover
    _powmod_base_list = None

#: Point at infinity for the projective orbit maps.
INFINITY = float("inf")


def is_wieferich(p: int) -> bool:
    """True iff p**2 divides 2**p - 2."""
    ctx = context(p)
    return pow(2, p, ctx.p2) == 2


def _roots_from_table(p: int, p2: int, s: list[int]) -> list[int]:
    # s[p] would be p**p == 0 mod p**2, handled by the x == p-1 branch.
    roots = [x for x in range(p - 1) if (s[x + 1] - s[x]) % p2 == 1]
    if (-s[p - 1]) % p2 == 1:
        roots.append(p - 1)
    return roots


def _fp_roots_direct(p: int, p2: int) -> list[int]:
    if _powmod_base_list is not None:
        s = [int(v) for v in _powmod_base_list(list(range(p)), p, p2)]
    else:
        s = [pow(x, p, p2) for x in range(p)]
    return _roots_from_table(p, p2, s)


def _fp_roots_sieve(p: int, p2: int, spf: list[int] | None = None) -> list[int]:
    s = _power_table_list(p, p2, spf)
    return _roots_from_table(p, p2, s)


@lru_cache(maxsize=512)
def _roots_cached(p: int) -> tuple[int, ...]:
    ctx = context(p)
    return tuple(_fp_roots_sieve(p, ctx.p2))


def fp_roots(p: int, method: str = "sieve", spf: list[int] | None = None) -> list[int]:
    """All x in 0..p-1 with (x+1)**p - x**p == 1 mod p**2, ascending.

    method="direct" exponentiates every base; method="sieve" builds the
    p-th power table multiplicatively and tests successive differences.
    The two agree everywhere (and are tested against each other).
    """
    ctx = context(p)  # raises InvalidPrime for p = 2 or composite
    if method == "direct":
        return _fp_roots_direct(p, ctx.p2)
    if method == "sieve":
        if spf is not None:
            return _fp_roots_sieve(p, ctx.p2, spf)
        return list(_roots_cached(p))
    raise InvalidPrime(f"unknown method {method!r}")


def orbit_of(p: int, x) -> tuple:
    """Images of x under the six maps generated by x -> -x-1 and x -> 1/x.

    Works on Z/pZ extended by INFINITY; returns the 6-tuple
    (x, -x-1, -1/(x+1), -x/(x+1), -(x+1)/x, 1/x), repeats included.
    """
    if x is INFINITY or x == INFINITY:
        return (INFINITY, INFINITY, 0, p - 1, p - 1, 0)
    x = x % p
    minus_x_1 = (-x - 1) % p
    if x == 0:
        return (0, p - 1, p - 1, 0, INFINITY, INFINITY)
    if x == p - 1:  # x + 1 == 0
        return (p - 1, 0, INFINITY, INFINITY, 0, p - 1)
    inv_x = invmod(x, p)
    inv_x1 = invmod(x + 1, p)
    return (
        x,
        minus_x_1,
        (-inv_x1) % p,
        (-x * inv_x1) % p,
        (-(x + 1) * inv_x) % p,
        inv_x,
    )


class ConsecutivePair(NamedTuple):
    """A pair (x**p, (x+1)**p) mod p**2 differing by exactly 1."""

    lo: int
    hi: int
    source_root: int


def consecutive_pairs(p: int) -> list[ConsecutivePair]:
    """Nontrivial consecutive p-th power pairs, one per root outside {0, p-1}."""
    ctx = context(p)
    pairs = []
    for x in fp_roots(p):
        if x == 0 or x == p - 1:
            continue
        lo = pth_power_lift(ctx, x)
        pairs.append(ConsecutivePair(lo=lo, hi=(lo + 1) % ctx.p2, source_root=x))
    return pairs


@dataclass(frozen=True)
class RootCensus:
    """Roots of one prime partitioned into their orbit classes."""

    p: int
    roots: tuple[int, ...]
    trivial: int
    cyclotomic: int
    wieferich: int
    sixpacks: int
    sixpack_orbits: tuple[tuple[int, ...], ...]

    @property
    def total(self) -> int:
        return len(self.roots)


def classify_roots(p: int, roots: list[int]) -> RootCensus:
    """Partition fp_roots(p) into trivial / cyclotomic / Wieferich / six-packs.

    Raises OrbitDecompositionFailure if the leftover roots do not split into
    disjoint orbits of six distinct elements; that never happens for genuine
    root lists and is exactly the structural claim this function tests.
    """
    root_set = set(roots)
    if 0 not in root_set or (p - 1) not in root_set:
        raise OrbitDecompositionFailure(f"p={p}: trivial roots 0, p-1 missing")
    rest = set(root_set)
    rest.discard(0)
    rest.discard(p - 1)

    cyclotomic = 0
    if p % 6 == 1:
        cube_roots = {x for x in rest if (x * x + x + 1) % p == 0}
        if len(cube_roots) != 2:
            raise OrbitDecompositionFailure(
                f"p={p}: expected both primitive cube roots of unity as roots"
            )
        cyclotomic = 2
        rest -= cube_roots

    wieferich = 0
    wief_orbit = {1, (p - 2) % p, invmod(p - 2, p)} if p > 3 else {1}
    present = wief_orbit & rest
    if present:
        if present != wief_orbit:
            raise OrbitDecompositionFailure(
                f"p={p}: partial Wieferich orbit {sorted(present)}"
            )
        wieferich = len(wief_orbit)
        rest -= wief_orbit

    orbits = []
    while rest:
        x = min(rest)
        orbit = set(orbit_of(p, x))
        if INFINITY in orbit or len(orbit) != 6 or not orbit <= rest:
            raise OrbitDecompositionFailure(
                f"p={p}: residue {x} does not sit in a clean six-pack"
            )
        orbits.append(tuple(sorted(orbit)))
        rest -= orbit

    return RootCensus(
        p=p,
        roots=tuple(sorted(root_set)),
        trivial=2,
        cyclotomic=cyclotomic,
        wieferich=wieferich,
        sixpacks=len(orbits),
        sixpack_orbits=tuple(orbits),
    )
