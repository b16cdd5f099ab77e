import math
import random

import pytest

from trinodisc import (
    InvalidArgument,
    NotCoprime,
    Poly,
    PreconditionFailed,
    SizeGuard,
    abc_report,
    cyclotomic_resultant,
    d_value,
    discriminant,
    ljunggren_classify,
    resultant,
    strange_divisibility_check,
    trinomial_discriminant,
)

SIGNS = (1, -1)


def test_d_value():
    assert d_value(2, 1, 1) == 5
    assert d_value(5, 1, 1) == 3125 + 256 == 3381
    assert d_value(5, 1, -1) == 2869
    with pytest.raises(SizeGuard):
        d_value(20001, 1, 1)
    with pytest.raises(InvalidArgument):
        d_value(3, 3, 1)


def test_poly_basics():
    f = Poly.trinomial(5, 1, -1, -1)
    assert f.coeffs == (-1, -1, 0, 0, 0, 1)
    assert f.degree == 5 and f.lead == 1
    assert Poly([0, 0]).is_zero()
    g = Poly([1, 1]) * Poly([-1, 1])
    assert g == Poly([-1, 0, 1])
    q, r = Poly([-1, 0, 1]).divmod_exact(Poly([1, 1]))
    assert q == Poly([-1, 1]) and r.is_zero()
    assert Poly([1, 2, 3]).compose_power(2) == Poly([1, 0, 2, 0, 3])
    assert Poly([0, 1, 0, 4]).derivative() == Poly([1, 0, 12])


def test_resultant_anchors():
    # Res(x - a, x - b) = a - b
    assert resultant(Poly([-5, 1]), Poly([-3, 1])) == 2
    assert resultant(Poly([3, 1]), Poly([-4, 1])) == -7
    assert resultant(Poly([1, 1, 1]), Poly([-1, 1])) == 3
    # x**7 + x**5 + 1 = (x**2 + x + 1) * h, and Res(g, h) = (49 - 35 + 25)/3
    f = Poly.trinomial(7, 5, 1, 1)
    g = Poly([1, 1, 1])
    h, rem = f.divmod_exact(g)
    assert rem.is_zero()
    assert resultant(g, h) == 13


def test_resultant_multiplicativity():
    rng = random.Random(99)
    for _ in range(50):
        f = Poly([rng.randrange(-4, 5) for _ in range(rng.randrange(2, 5))] + [1])
        g = Poly([rng.randrange(-4, 5) for _ in range(rng.randrange(2, 5))] + [1])
        h = Poly([rng.randrange(-4, 5) for _ in range(rng.randrange(2, 5))] + [1])
        assert resultant(f, g * h) == resultant(f, g) * resultant(f, h)


def test_discriminant_anchors():
    assert discriminant(Poly([1, 1, 1])) == -3
    assert discriminant(Poly([-1, -1, 1])) == 5  # x**2 - x - 1
    assert abs(discriminant(Poly.trinomial(5, 1, -1, -1))) == 2869


def gkz_disc(f):
    """Res(f, f')/lc without the (-1)**(d(d-1)/2) twist: the convention in
    which the product identity carries the (-1)**(deg*deg) sign."""
    d = f.degree
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * discriminant(f)


def test_discriminant_product_formula():
    # In the b**2-4ac convention used by discriminant() the identity is
    # twist-free: Disc(fg) = Disc(f) Disc(g) Res(f, g)**2.  The classical
    # (-1)**(deg f * deg g) factor belongs to the untwisted convention,
    # checked alongside.
    rng = random.Random(17)
    done = 0
    while done < 50:
        f = Poly([rng.randrange(-5, 6) for _ in range(rng.randrange(1, 7))] + [1])
        g = Poly([rng.randrange(-5, 6) for _ in range(rng.randrange(1, 7))] + [1])
        if f.degree < 1 or g.degree < 1:
            continue
        fg = f * g
        res2 = resultant(f, g) ** 2
        assert discriminant(fg) == discriminant(f) * discriminant(g) * res2
        sign = -1 if (f.degree * g.degree) % 2 else 1
        assert gkz_disc(fg) == sign * gkz_disc(f) * gkz_disc(g) * res2
        done += 1


def test_trinomial_discriminant_sign_rule():
    assert trinomial_discriminant(5, 1, -1, -1) == (2869, -1)
    assert trinomial_discriminant(5, 1, 1, 1) == (3381, 1)
    # degenerate low degree: the sign rule still matches the Sylvester oracle
    value, eps = trinomial_discriminant(2, 1, 1, 1)
    assert (value, eps) == (3, -1)
    assert abs(discriminant(Poly.trinomial(2, 1, 1, 1))) == 3
    with pytest.raises(NotCoprime):
        trinomial_discriminant(6, 3, 1, 1)


def test_trinomial_discriminant_matches_oracle_exhaustive():
    for n in range(2, 19):
        for m in range(1, n):
            if math.gcd(n, m) != 1:
                continue
            for a in SIGNS:
                for b in SIGNS:
                    value, eps = trinomial_discriminant(n, m, a, b)
                    assert value == abs(discriminant(Poly.trinomial(n, m, a, b))), (n, m, a, b)
                    assert value == d_value(n, m, eps)


def test_ljunggren_anchors():
    c = ljunggren_classify(7, 5, 1, 1)
    assert (c.factor.sign, c.factor.d) == (1, 1)  # x**2 + x + 1
    assert all(ljunggren_classify(n, 1, -1, -1).is_irreducible for n in range(2, 40))
    c = ljunggren_classify(14, 10, 1, 1)
    assert c.factor.d == 2 and c.factor.sign == 1
    assert c.factor.g_poly() == Poly([1, 0, 1, 0, 1])


def test_ljunggren_case_table():
    # one representative of each reducible pattern
    assert not ljunggren_classify(7, 5, 1, 1).is_irreducible     # (1,5), a=+1
    assert not ljunggren_classify(11, 7, 1, -1).is_irreducible   # (5,1), a=+1
    assert not ljunggren_classify(8, 1, -1, 1).is_irreducible    # (2,1), b=+1
    assert not ljunggren_classify(10, 5, 1, 1).is_irreducible    # (4,5) after d=5 -> (2,1)
    assert not ljunggren_classify(7, 2, -1, -1).is_irreducible   # (1,2), a=b
    assert not ljunggren_classify(17, 10, 1, 1).is_irreducible   # (5,4), a=b
    # sign conditions matter
    assert ljunggren_classify(7, 5, -1, 1).is_irreducible
    assert ljunggren_classify(8, 1, -1, -1).is_irreducible
    assert ljunggren_classify(7, 2, 1, -1).is_irreducible


def test_ljunggren_factor_divides_exactly():
    for n in range(2, 30):
        for m in range(1, n):
            for a in SIGNS:
                for b in SIGNS:
                    c = ljunggren_classify(n, m, a, b)
                    if c.is_irreducible:
                        continue
                    g = c.factor.g_poly()
                    h = c.cofactor()
                    assert g * h == c.polynomial()
                    # the cofactor is never again divisible by g
                    assert resultant(g, h) != 0


def test_cyclotomic_resultant_anchors():
    assert cyclotomic_resultant(7, 5, 1, 1) == 13
    assert cyclotomic_resultant(14, 10, 1, 1) == 169
    assert cyclotomic_resultant(2, 1, 1, 1) == 1
    with pytest.raises(PreconditionFailed):
        cyclotomic_resultant(5, 1, -1, -1)


def test_cyclotomic_resultant_matches_sylvester():
    for n in range(2, 41):
        for m in range(1, n):
            for a in SIGNS:
                for b in SIGNS:
                    c = ljunggren_classify(n, m, a, b)
                    if c.is_irreducible:
                        continue
                    g = c.factor.g_poly()
                    h = c.cofactor()
                    assert cyclotomic_resultant(n, m, a, b) == abs(resultant(g, h)), (n, m, a, b)


def test_square_divisor_chain():
    # for reducible coprime cases the squared resultant divides the value
    for n in range(2, 19):
        for m in range(1, n):
            if math.gcd(n, m) != 1:
                continue
            for a in SIGNS:
                for b in SIGNS:
                    c = ljunggren_classify(n, m, a, b)
                    if c.is_irreducible:
                        continue
                    value, _ = trinomial_discriminant(n, m, a, b)
                    r = cyclotomic_resultant(n, m, a, b)
                    assert value % (r * r) == 0, (n, m, a, b)


def test_strange_divisibility():
    assert strange_divisibility_check(0)
    assert strange_divisibility_check(1)
    assert 8**8 - 7**7 == 361 * 44193
    assert all(strange_divisibility_check(k) for k in range(500))
    with pytest.raises(InvalidArgument):
        strange_divisibility_check(-1)


def test_abc_report_anchors():
    r = abc_report(0)
    assert r.n == 8 and r.seven_power and r.square_divides_b is True
    r = abc_report(1)
    assert r.n == 2097152
    assert r.seven_power  # 49 | n - 1
    assert (2097152 - 1) % 49 == 0
    assert all(abc_report(k).seven_power for k in range(6))
    with pytest.raises(SizeGuard):
        abc_report(13)


def test_abc_square_reduction_matches_direct():
    # the cubic-identity reduction agrees with raw exponentiation mod M**2
    for k in (0, 1, 2, 3):
        n = 8 ** (7**k)
        m = (n * n - n + 1) // 3
        m2 = m * m
        direct = (pow(n % m2, n, m2) - pow((n - 1) % m2, n - 1, m2)) % m2 == 0
        assert abc_report(k).square_divides_b is direct is True


def test_abc_bound_log_growth():
    import mpmath

    r0, r1 = abc_report(0), abc_report(1)
    # log bound = log(6 log 8) + log c - log log c with c = n**n
    for r, n in ((r0, 8), (r1, 8**7)):
        log_c = n * math.log(n)
        expected = math.log(6 * math.log(8)) + log_c - math.log(log_c)
        assert abs(float(r.bound_log) - expected) < 1e-6
    assert abc_report(5).bound_log > abc_report(4).bound_log
    assert mpmath.isfinite(abc_report(12).bound_log)
