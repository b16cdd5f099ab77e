import math
from fractions import Fraction

import pytest

from trinodisc import (
    IncompleteCache,
    InvalidArgument,
    build_cp,
    build_dpq,
    census,
    cp_average,
    density_estimate,
    fp_roots,
    ie_bounds,
    poisson_root_density,
    squarefree_scan,
    tail_sum,
)
from trinodisc.primes import primes_list


def cp_bruteforce(p):
    """Oracle: raw double exponentiation over all p*(p-1) residue classes."""
    L = p * (p - 1)
    p2 = p * p
    out = []
    for a in range(L):
        n = a if a >= 2 else a + L
        sign = -1 if n % 2 else 1
        if (pow(n, n, p2) + sign * pow(n - 1, n - 1, p2)) % p2 == 0:
            out.append(a)
    return tuple(out)


def small_cache(x):
    return {p: build_cp(p) for p in primes_list(3, x)}


def test_build_cp_anchors():
    assert build_cp(7).residues == ()
    assert 130 in build_cp(83).residues
    c59 = build_cp(59)
    assert set(c59.residues) >= {257, 487, 528, 815, 897}
    assert c59.modulus == 59 * 58


def test_build_cp_candidates_all_fail_parity_at_7():
    # the four divisible classes of p=7 sit in the wrong-parity sets
    from trinodisc import a_set

    assert tuple(a_set(7, 1, 1)) == (5, 17)    # both odd, need even
    assert tuple(a_set(7, 1, -1)) == (26, 38)  # both even, need odd
    assert build_cp(7).residues == ()


def test_build_cp_equals_bruteforce():
    for p in primes_list(3, 300):
        assert build_cp(p).residues == cp_bruteforce(p), p


def test_cp_members_reverify():
    for p in (59, 83, 131):
        cp = build_cp(p)
        p2 = p * p
        for a in cp.residues:
            for n in (a, a + cp.modulus):
                if n < 2:
                    n += cp.modulus
                sign = -1 if n % 2 else 1
                assert (pow(n, n, p2) + sign * pow(n - 1, n - 1, p2)) % p2 == 0


def test_build_dpq():
    c59, c83 = build_cp(59), build_cp(83)
    d = build_dpq(c59, c83)
    g = math.gcd(59 * 58, 83 * 82)
    expected = [(a, b) for a in c59.residues for b in c83.residues
                if (a - b) % g == 0]
    assert list(d.pairs) == expected
    assert len(d) <= len(c59) * len(c83)
    assert build_dpq(build_cp(3), c59).pairs == ()
    with pytest.raises(InvalidArgument):
        build_dpq(c83, c59)


def test_dpq_transpose():
    # swapping arguments is rejected, but the pair relation is symmetric
    c59, c83 = build_cp(59), build_cp(83)
    d = build_dpq(c59, c83)
    g = math.gcd(c59.modulus, c83.modulus)
    for a, b in d.pairs:
        assert (b - a) % g == 0


def test_ie_bounds_at_10_is_exactly_one():
    b = ie_bounds(10, small_cache(10))
    assert b.lower == 1 and b.upper == 1 and b.triple_correction == 0
    assert b.decimal() == ("1", "1")


def test_ie_bounds_structure():
    cache = small_cache(300)
    b = ie_bounds(300, cache)
    assert b.lower <= b.upper
    assert b.upper - b.lower == b.triple_correction
    assert Fraction(9, 10) < b.lower < 1


def test_ie_bounds_monotone_in_x():
    cache = small_cache(2000)
    uppers = [ie_bounds(x, cache).upper for x in (100, 500, 1000, 2000)]
    assert all(a >= b for a, b in zip(uppers, uppers[1:]))


def test_ie_bounds_requires_cover():
    cache = small_cache(50)
    del cache[31]
    with pytest.raises(IncompleteCache):
        ie_bounds(50, cache)


def test_ie_bounds_matches_float_recomputation():
    cache = small_cache(1000)
    b = ie_bounds(1000, cache)
    sets = [cache[p] for p in sorted(cache) if len(cache[p])]
    s1 = sum(len(s) / s.modulus for s in sets)
    s2 = 0.0
    for i, sp in enumerate(sets):
        for sq in sets[i + 1 :]:
            g = math.gcd(sp.modulus, sq.modulus)
            count = sum(
                1 for a in sp.residues for b2 in sq.residues if (a - b2) % g == 0
            )
            s2 += count / (sp.modulus // g * sq.modulus)
    upper_float = 1.0 - s1 + s2
    assert abs(float(b.upper) - upper_float) < 1e-12 * upper_float


def test_ie_bounds_triple_term_not_understated():
    # the pair-by-pair triple accumulation dominates a direct overcount sum
    cache = small_cache(300)
    sets = [cache[p] for p in sorted(cache) if len(cache[p])]
    direct = Fraction(0)
    for i, sp in enumerate(sets):
        for j in range(i + 1, len(sets)):
            sq = sets[j]
            g = math.gcd(sp.modulus, sq.modulus)
            count = sum(
                1 for a in sp.residues for b2 in sq.residues if (a - b2) % g == 0
            )
            if not count:
                continue
            lcm_pq = sp.modulus // g * sq.modulus
            for sr in sets[j + 1 :]:
                g3 = math.gcd(lcm_pq, sr.modulus)
                direct += Fraction(count * len(sr), lcm_pq // g3 * sr.modulus)
    b = ie_bounds(300, cache)
    assert direct <= b.triple_correction <= direct + Fraction(1, 10**9)


def d_eps_reverify(n, p):
    from trinodisc import d_eps_divisible

    return d_eps_divisible(p, n, 1, 1 if n % 2 == 0 else -1)


def test_squarefree_scan_small():
    assert squarefree_scan(10, 100) == {}
    hits = squarefree_scan(200, 500)
    assert hits == {130: 83}
    for n, p in hits.items():
        assert d_eps_reverify(n, p)


def test_tail_sum_anchors():
    tiny = Fraction(1, 10**40)
    assert abs(tail_sum(11, 13) - Fraction(1, 11 * 10)) < tiny
    assert abs(tail_sum(2, 10) - Fraction(311, 420)) < tiny
    assert float(tail_sum(2, 10)) == pytest.approx(0.7404762, abs=1e-7)
    assert tail_sum(14, 17) == 0  # no primes in [14, 17)
    assert abs(tail_sum(13, 14) - Fraction(1, 13 * 12)) < tiny


def test_tail_sum_consistency():
    assert abs(
        tail_sum(2, 1000) - (tail_sum(2, 97) + tail_sum(97, 1000))
    ) < Fraction(1, 10**40)
    exact = sum(Fraction(1, p * (p - 1)) for p in primes_list(100, 1000))
    assert abs(tail_sum(100, 1000) - exact) < Fraction(1, 10**40)
    with pytest.raises(InvalidArgument):
        tail_sum(10, 5)


def test_cp_average():
    assert cp_average(10, small_cache(10)) == 0.0
    cache = small_cache(300)
    mean = cp_average(300, cache)
    assert mean == sum(len(s) for s in cache.values()) / len(cache)
    assert 0 <= mean < 3


def test_poisson_density():
    assert poisson_root_density(2) == pytest.approx(math.exp(-1 / 6) / 2)
    assert poisson_root_density(4) == pytest.approx(math.exp(-1 / 6) / 2)
    assert poisson_root_density(8) == pytest.approx(math.exp(-1 / 6) / 12)
    assert poisson_root_density(14) == pytest.approx(math.exp(-1 / 6) / 144)
    assert poisson_root_density(7) == 0.0
    assert poisson_root_density(19) == 0.0
    # densities over all root counts sum to 1
    assert sum(poisson_root_density(m) for m in range(2, 400)) == pytest.approx(1.0)


def test_census_small():
    x = 3000
    cache = {p: tuple(fp_roots(p)) for p in primes_list(3, x)}
    t = census(x, cache)
    assert sum(t.actual.values()) == t.n_primes == len(cache)
    assert t.actual[19] == 1  # 1093 sits below 3000
    assert t.predicted[2] == pytest.approx(t.n_primes * math.exp(-1 / 6) / 2)
    assert t.predicted[19] == 0.0
    assert t.actual_at_least(26) == sum(c for m, c in t.actual.items() if m >= 26)


def test_bounds_match_empirical_density():
    # direct count: fraction of n <= N with no p**2-divisor for p < 100
    X, N = 100, 50_000
    primes = primes_list(3, X)
    squares = [p * p for p in primes]
    clean = 0
    for n in range(2, N + 2):
        sign = -1 if n % 2 else 1
        if not any(
            (pow(n, n, p2) + sign * pow(n - 1, n - 1, p2)) % p2 == 0
            for p2 in squares
        ):
            clean += 1
    b = ie_bounds(X, {p: build_cp(p) for p in primes})
    # the set is a union of ~24 residue classes; the truncated count can
    # stray from the density only by edge effects
    assert abs(clean / N - float(b.upper)) < 5e-4
    assert b.upper - b.lower < Fraction(1, 10**6)


def test_density_estimate_smoke():
    # tiny scale exercises the bracket plumbing with a reduced far bound
    cache = small_cache(100)
    lo, hi = density_estimate(100, cache, x1=10**6)
    b = ie_bounds(100, cache)
    assert 0 < lo <= hi < b.upper
    assert lo < b.lower
    assert hi - lo < Fraction(1, 100)
