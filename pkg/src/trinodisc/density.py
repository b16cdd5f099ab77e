"""Exceptional sets, inclusion-exclusion density bounds, and census statistics.

The headline quantity is the density of n whose value n**n +
(-1)**n*(n-1)**(n-1) is squarefree.  Per prime p the obstructing residue
classes mod p*(p-1) form a small set (one element on average); pairwise and
triple interactions enter through Bonferroni bounds.  All bound arithmetic
is done with exact scaled integers so the eight-decimal claims never rest
on float rounding: each reported bound is a rigorous enclosure endpoint
represented as a Fraction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from .correspondence import _pair_witness_exponents
from .errors import IncompleteCache, InvalidArgument
from .fproots import consecutive_pairs
from .modarith import context, invmod
from .primes import factorize, nth_primes, primes_in_range, primes_list

# Scale for exact floor/ceil sums: one unit of slack per term stays far
# below the 10-significant-digit rendering.
_SCALE = 10**42
_TRIPLE_SCALE = 10**24
# Per-pair weights in the triple sum are exact to 2**-48 relative error,
# which the upper-bound rounding absorbs.
_W_BITS = 48
# Pairs with smaller prime above this bound are handed to the coarse tail
# bound; below it the triple term is accumulated pair by pair.  Keeps
# lcm(p(p-1), q(q-1)) inside int64 for vectorized gcd.
_TRIPLE_EXACT_BOUND = 5000


@dataclass(frozen=True)
class CpSet:
    """Residues a mod p*(p-1) with p**2 | a**a + (-1)**a*(a-1)**(a-1)."""

    p: int
    modulus: int
    residues: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.residues)

    def __iter__(self):
        return iter(self.residues)


@dataclass(frozen=True)
class DpqSet:
    """Compatible residue pairs: gcd(p(p-1), q(q-1)) divides a - b."""

    p: int
    q: int
    pairs: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class DensityBounds:
    """Rigorous enclosure of the inclusion-exclusion bounds at prime bound x.

    upper >= the Bonferroni upper bound, lower <= the Bonferroni lower
    bound, and upper - lower == triple_correction exactly by construction
    (the correction holds the triple sum plus all enclosure slack).
    """

    lower: Fraction
    upper: Fraction
    triple_correction: Fraction
    prime_bound: int

    def decimal(self, digits: int = 10) -> tuple[str, str]:
        """(lower, upper) rendered to `digits` significant digits."""
        return _render(self.lower, digits), _render(self.upper, digits)


def _render(value: Fraction, digits: int) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(value.numerator) / Decimal(value.denominator))


def _surviving_ks(k0: int | None, order: int, p: int, want_odd_k: bool):
    """Exponents k0, k0+order, ... <= p-1 whose mapped class has the right
    parity.  beta(x, k) = (1-k)p - (1-x)**(-1)(p-1) mod p(p-1) is odd
    exactly when k is odd (the second term is even, p odd), so parity
    filtering happens on k before any witness is materialized."""
    if k0 is None:
        return
    if order % 2 == 0:
        if (k0 % 2 == 1) == want_odd_k:
            yield from range(k0, p, order)
        return
    if (k0 % 2 == 1) != want_odd_k:
        k0 += order
    yield from range(k0, p, 2 * order)


def build_cp(p: int) -> CpSet:
    """Compute the exceptional set of p through the witness correspondence.

    Witnesses for both signs at m = 1 map back to divisible residue
    classes; a class survives only when its parity matches the sign it
    came from (the alternating (-1)**a needs eps = (-1)**a, and parity is
    class-invariant because p*(p-1) is even).  No root sources are skipped:
    trivial roots never produce witnesses, and cyclotomic pairs always land
    in the wrong-parity progressions, which the brute-force oracle and the
    a_set round trip both confirm.
    """
    ctx = context(p)
    p1_factors = factorize(p - 1)
    residues = []
    for pair in consecutive_pairs(p):
        x = pair.hi
        order, k_plus, k_minus = _pair_witness_exponents(ctx, x, 1, p1_factors)
        # eps=+1 needs an even class: beta parity == k parity, m = 1 makes
        # the class parity equal to 1-k, so +1 keeps odd k, -1 even k.
        ks_plus = list(_surviving_ks(k_plus, order, p, want_odd_k=True))
        ks_minus = list(_surviving_ks(k_minus, order, p, want_odd_k=False))
        if not ks_plus and not ks_minus:
            continue
        coeff = invmod((1 - x) % ctx.p2, ctx.p2) * (p - 1)
        for k in ks_plus + ks_minus:
            residues.append(((1 - k) * p - coeff) % ctx.mod_order)
    return CpSet(p=p, modulus=ctx.mod_order, residues=tuple(sorted(residues)))


def build_dpq(cp: CpSet, cq: CpSet) -> DpqSet:
    """All compatible pairs between two exceptional sets (cp.p < cq.p)."""
    if cp.p >= cq.p:
        raise InvalidArgument(f"need cp.p < cq.p, got {cp.p} >= {cq.p}")
    g = math.gcd(cp.modulus, cq.modulus)
    pairs = tuple(
        (a, b) for a in cp.residues for b in cq.residues if (a - b) % g == 0
    )
    return DpqSet(p=cp.p, q=cq.p, pairs=pairs)


def _count_compatible(res_p: Sequence[int], res_q: Sequence[int], g: int) -> int:
    count = 0
    for a in res_p:
        am = a % g
        for b in res_q:
            if (b - am) % g == 0:
                count += 1
    return count


def _require_cover(cache: Mapping[int, object], x: int, what: str) -> list[int]:
    odd_primes = primes_list(3, x)
    missing = [p for p in odd_primes if p not in cache]
    if missing:
        raise IncompleteCache(
            f"{what} lacks {len(missing)} primes below {x} (first: {missing[0]})"
        )
    return odd_primes


def ie_bounds(x: int, cp_cache: Mapping[int, CpSet],
              triple_exact_bound: int = _TRIPLE_EXACT_BOUND) -> DensityBounds:
    """Bonferroni enclosure of the density of values clean below x.

    upper = 1 - sum #C_p/(p(p-1)) + sum #D_pq/lcm over primes < x;
    lower subtracts the triple-overcount sum #D_pq * #C_r / lcm3 (kept as
    the deliberate overcount: pair/third compatibility is not checked).
    Pairs whose smaller prime exceeds triple_exact_bound enter the triple
    term through the rigorous coarse bound kappa * (their pair-sum share)
    instead of an r-loop; every rounding goes toward widening the bracket.
    """
    odd_primes = _require_cover(cp_cache, x, "cp cache")
    sets = [cp_cache[p] for p in odd_primes if len(cp_cache[p])]

    s1_floor = 0
    for s in sets:
        s1_floor += len(s) * _SCALE // s.modulus
    s1_lo = Fraction(s1_floor, _SCALE)
    s1_hi = Fraction(s1_floor + len(sets), _SCALE)

    # Vectors for the triple term's inner r-sums, ordered by prime.
    r_primes = np.array([s.p for s in sets], dtype=np.int64)
    w_bound = 1 << _W_BITS
    # ceil weights make every inner sum an upper bound
    r_weight = np.array(
        [len(s) * ((w_bound + s.modulus - 1) // s.modulus) for s in sets],
        dtype=np.int64,
    )
    r_minus_1 = r_primes - 1
    # lcm(p(p-1), q(q-1)) can pass 2**63, so gcds against r-1 go through a
    # 62-bit split reduction first.
    two62_mod = ((np.int64(1) << 62) % r_minus_1) if len(sets) else r_minus_1

    s2_floor = 0
    s2_pairs = 0
    s2_large_floor = 0  # share of the pair sum with p > triple_exact_bound
    s2_large_pairs = 0
    triple_scaled = 0

    for i, sp in enumerate(sets):
        lp = sp.modulus
        res_p = sp.residues
        exact_triple = sp.p <= triple_exact_bound
        for j in range(i + 1, len(sets)):
            sq = sets[j]
            g = math.gcd(lp, sq.modulus)
            count = _count_compatible(res_p, sq.residues, g)
            if count == 0:
                continue
            lcm_pq = lp // g * sq.modulus
            s2_floor += count * _SCALE // lcm_pq
            s2_pairs += 1
            if exact_triple:
                if j + 1 < len(sets):
                    # gcd(lcm_pq, r(r-1)) == gcd(lcm_pq, r-1): a prime
                    # r > q cannot divide p, p-1, q or q-1.
                    rm1 = r_minus_1[j + 1 :]
                    hi_part = lcm_pq >> 62
                    low_part = np.int64(lcm_pq & ((1 << 62) - 1))
                    red = (hi_part * two62_mod[j + 1 :] + low_part % rm1) % rm1
                    g3 = np.gcd(red, rm1)
                    inner = int(np.sum(g3 * r_weight[j + 1 :]))
                    num = count * inner * _TRIPLE_SCALE
                    den = lcm_pq << _W_BITS
                    triple_scaled += -(-num // den)  # ceil
            else:
                s2_large_floor += count * _SCALE // lcm_pq
                s2_large_pairs += 1

    s2_lo = Fraction(s2_floor, _SCALE)
    s2_hi = Fraction(s2_floor + s2_pairs, _SCALE)

    # kappa >= any suffix sum of #C_r * gcd(., r-1)/(r(r-1)) <= #C_r/r.
    kappa_hi = Fraction(
        sum(len(s) * (-(-_SCALE // s.p)) for s in sets), _SCALE
    )
    s2_large_hi = Fraction(s2_large_floor + s2_large_pairs, _SCALE)
    triple_hi = Fraction(triple_scaled, _TRIPLE_SCALE) + kappa_hi * s2_large_hi

    upper = 1 - s1_lo + s2_hi
    correction = triple_hi + (s1_hi - s1_lo) + (s2_hi - s2_lo)
    return DensityBounds(
        lower=upper - correction,
        upper=upper,
        triple_correction=correction,
        prime_bound=x,
    )


def squarefree_scan(n_max: int, prime_count: int) -> dict[int, int]:
    """For 2 <= n <= n_max, the smallest of the first prime_count primes
    whose square divides n**n + (-1)**n*(n-1)**(n-1); n absent if none."""
    if n_max < 2 or prime_count < 1:
        raise InvalidArgument("need n_max >= 2 and prime_count >= 1")
    primes = nth_primes(prime_count)
    squares = [p * p for p in primes]
    hits: dict[int, int] = {}
    for n in range(2, n_max + 1):
        sign = -1 if n % 2 else 1
        for p, p2 in zip(primes, squares):
            if (pow(n, n, p2) + sign * pow(n - 1, n - 1, p2)) % p2 == 0:
                hits[n] = p
                break
    return hits


def tail_sum(lo: int, hi: int) -> Fraction:
    """sum of 1/(p(p-1)) over primes lo <= p < hi, exact to ~50 digits.

    Accumulated as floor(2**192 / (p(p-1))) in integers; the one-sided
    error is below count/2**192, far inside the advertised precision.
    """
    if not 2 <= lo < hi <= 2 * 10**9:
        raise InvalidArgument(f"need 2 <= lo < hi <= 2e9, got ({lo}, {hi})")
    scale = 1 << 192
    total = 0
    for block in primes_in_range(lo, hi):
        for p in block.tolist():
            total += scale // (p * (p - 1))
    return Fraction(total, scale)


def cp_average(x: int, cp_cache: Mapping[int, CpSet]) -> float:
    """Mean exceptional-set size over the cached odd primes below x."""
    odd_primes = _require_cover(cp_cache, x, "cp cache")
    if not odd_primes:
        return 0.0
    return sum(len(cp_cache[p]) for p in odd_primes) / len(odd_primes)


def poisson_root_density(m: int) -> float:
    """Predicted relative density of primes whose root count is exactly m.

    Root counts sit at 6k+2 or 6k+4 (k six-packs plus the forced roots)
    with density e**(-1/6)/(2*6**k*k!) each; every other count has
    predicted density 0.  Wieferich displacements are left out of the
    prediction deliberately.
    """
    if m >= 2 and m % 6 in (2, 4):
        k = (m - 2) // 6
        return math.exp(-1 / 6) / (2 * 6**k * math.factorial(k))
    return 0.0


@dataclass(frozen=True)
class CensusTable:
    """Histogram of root counts with Poisson predictions alongside."""

    prime_bound: int
    n_primes: int
    actual: dict[int, int]
    predicted: dict[int, float]

    def actual_at_least(self, m: int) -> int:
        return sum(c for mm, c in self.actual.items() if mm >= m)


def census(x: int, roots_cache: Mapping[int, Sequence[int]]) -> CensusTable:
    """Tabulate #roots per odd prime below x against the Poisson prediction."""
    odd_primes = _require_cover(roots_cache, x, "roots cache")
    actual: dict[int, int] = {}
    for p in odd_primes:
        m = len(roots_cache[p])
        actual[m] = actual.get(m, 0) + 1
    n_primes = len(odd_primes)
    ms = sorted(actual)
    top = max(ms) if ms else 2
    predicted = {
        m: n_primes * poisson_root_density(m)
        for m in sorted(set(ms) | {v for v in range(2, top + 1) if v % 6 in (2, 4)})
    }
    return CensusTable(
        prime_bound=x, n_primes=n_primes, actual=actual, predicted=predicted
    )


def density_estimate(x: int, cp_cache: Mapping[int, CpSet],
                     x1: int = 10**9) -> tuple[Fraction, Fraction]:
    """Heuristic bracket for the squarefree density over all primes.

    Multiplies the rigorous bounds at x by the tail factor bracket
    [1 - T, 1 - t1 + T**2/2] where t1 sums 1/(p(p-1)) over x <= p < x1 and
    T adds the integral bound 1/x1 for everything past x1.
    """
    bounds = ie_bounds(x, cp_cache)
    t1 = tail_sum(x, x1)
    full_tail = t1 + Fraction(1, x1)
    lo = bounds.lower * (1 - full_tail)
    hi = bounds.upper * (1 - t1 + full_tail * full_tail / 2)
    return lo, hi
