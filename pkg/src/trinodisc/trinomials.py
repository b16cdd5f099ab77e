"""Exact integer verification layer: discriminants, resultants, reducibility.

Everything here runs over arbitrary-precision integers.  Trinomial values
n**n + eps*(n-m)**(n-m)*m**m are materialized exactly (with a size guard);
resultants and discriminants go through a fraction-free Sylvester
determinant so every identity can be checked with equality, never with
tolerances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath

from .errors import InvalidArgument, NotCoprime, PreconditionFailed, SizeGuard

D_VALUE_MAX_N = 10_000
ABC_MAX_K = 12
# Largest k for which the square-divisor check is run: the modulus
# (n**2-n+1)/3 with n = 8**(7**k) has about 6*7**k bits, which passes
# 100 MB shortly after k = 8.
ABC_SQUARE_CHECK_MAX_K = 7


def _check_sign(s: int, name: str) -> int:
    if s not in (1, -1):
        raise InvalidArgument(f"{name} must be +1 or -1, got {s}")
    return s


def d_value(n: int, m: int, eps: int) -> int:
    """The exact integer n**n + eps*(n-m)**(n-m)*m**m."""
    _check_sign(eps, "eps")
    if not n > m >= 1:
        raise InvalidArgument(f"need n > m >= 1, got n={n}, m={m}")
    if n > D_VALUE_MAX_N:
        raise SizeGuard(f"n = {n} exceeds the exact-value limit {D_VALUE_MAX_N}")
    return n**n + eps * (n - m) ** (n - m) * m**m


class Poly:
    """Dense integer polynomial; coeffs[i] is the coefficient of x**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def trinomial(cls, n: int, m: int, a: int, b: int) -> "Poly":
        """x**n + a*x**m + b."""
        c = [0] * (n + 1)
        c[0] = b
        c[m] += a
        c[n] += 1
        return cls(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        if not self.coeffs:
            raise InvalidArgument("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)})"

    def divmod_exact(self, divisor: "Poly") -> tuple["Poly", "Poly"]:
        """Polynomial division; requires the divisor to be monic."""
        if divisor.is_zero() or divisor.lead != 1:
            raise InvalidArgument("divisor must be monic")
        rem = list(self.coeffs)
        dd = divisor.degree
        if self.degree < dd:
            return Poly([]), Poly(rem)
        quot = [0] * (self.degree - dd + 1)
        for i in range(len(quot) - 1, -1, -1):
            q = rem[i + dd]
            if q:
                quot[i] = q
                for j, c in enumerate(divisor.coeffs):
                    rem[i + j] -= q * c
        return Poly(quot), Poly(rem)

    def compose_power(self, d: int) -> "Poly":
        """Substitute x**d for x."""
        out = [0] * (self.degree * d + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * d] = c
        return Poly(out)


def _det_bareiss(mat: list[list[int]]) -> int:
    """Exact determinant by fraction-free Gaussian elimination."""
    n = len(mat)
    if n == 0:
        return 1
    m = [row[:] for row in mat]
    sign = 1
    prev = 1
    for i in range(n - 1):
        if m[i][i] == 0:
            for r in range(i + 1, n):
                if m[r][i] != 0:
                    m[i], m[r] = m[r], m[i]
                    sign = -sign
                    break
            else:
                return 0
        for j in range(i + 1, n):
            for k in range(i + 1, n):
                m[j][k] = (m[j][k] * m[i][i] - m[j][i] * m[i][k]) // prev
            m[j][i] = 0
        prev = m[i][i]
    return sign * m[n - 1][n - 1]


def resultant(f: Poly, g: Poly) -> int:
    """Res(f, g) = lead(f)**deg(g) * prod g(alpha) over the roots of f.

    Computed as the Sylvester determinant, so it is exact for arbitrary
    integer coefficients.
    """
    if f.is_zero() or g.is_zero():
        raise InvalidArgument("resultant needs nonzero polynomials")
    df, dg = f.degree, g.degree
    if df == 0:
        return f.coeffs[0] ** dg
    if dg == 0:
        return g.coeffs[0] ** df
    size = df + dg
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    mat = []
    for i in range(dg):
        mat.append([0] * i + fc + [0] * (size - i - len(fc)))
    for i in range(df):
        mat.append([0] * i + gc + [0] * (size - i - len(gc)))
    return _det_bareiss(mat)


def discriminant(f: Poly) -> int:
    """Disc(f) = (-1)**(d(d-1)/2) * Res(f, f') / lead(f)."""
    d = f.degree
    if d < 1:
        raise InvalidArgument("discriminant needs degree >= 1")
    res = resultant(f, f.derivative())
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    quot, rem = divmod(sign * res, f.lead)
    if rem:
        raise InvalidArgument("resultant not divisible by leading coefficient")
    return quot


def trinomial_discriminant(n: int, m: int, a: int, b: int) -> tuple[int, int]:
    """(|Disc(x**n + a*x**m + b)|, eps) with eps = (-1)**(n-1) * a**n * b**(n-m).

    The absolute value equals d_value(n, m, eps); valid for coprime n > m.
    """
    _check_sign(a, "a")
    _check_sign(b, "b")
    if not n > m >= 1:
        raise InvalidArgument(f"need n > m >= 1, got n={n}, m={m}")
    if math.gcd(n, m) != 1:
        raise NotCoprime(f"gcd({n}, {m}) > 1")
    eps = (-1 if (n - 1) % 2 else 1) * (a if n % 2 else 1) * (b if (n - m) % 2 else 1)
    return d_value(n, m, eps), eps


@dataclass(frozen=True)
class CyclotomicFactor:
    """A factor g(x**d) with g(x) = x**2 + sign*x + 1."""

    sign: int
    d: int

    def g_poly(self) -> Poly:
        return Poly([1, self.sign, 1]).compose_power(self.d)


@dataclass(frozen=True)
class TrinomialClass:
    """Reducibility verdict for x**n + a*x**m + b."""

    n: int
    m: int
    a: int
    b: int
    factor: CyclotomicFactor | None

    @property
    def is_irreducible(self) -> bool:
        return self.factor is None

    def polynomial(self) -> Poly:
        return Poly.trinomial(self.n, self.m, self.a, self.b)

    def cofactor(self) -> Poly:
        """The exact cofactor h(x**d); requires a cyclotomic factor."""
        if self.factor is None:
            raise PreconditionFailed("trinomial is irreducible")
        quot, rem = self.polynomial().divmod_exact(self.factor.g_poly())
        if not rem.is_zero():
            raise PreconditionFailed("classified factor does not divide exactly")
        return quot


def ljunggren_classify(n: int, m: int, a: int, b: int) -> TrinomialClass:
    """Complete reducibility classification of x**n + a*x**m + b.

    After removing d = gcd(n, m), the primitive part is irreducible except
    in six residue patterns mod 6 where a quadratic cyclotomic factor
    splits off; the composed factor g(x**d) then divides the original.
    """
    _check_sign(a, "a")
    _check_sign(b, "b")
    if not n > m >= 1:
        raise InvalidArgument(f"need n > m >= 1, got n={n}, m={m}")
    d = math.gcd(n, m)
    key = ((n // d) % 6, (m // d) % 6)
    sign = None
    if key in ((1, 5), (5, 1)) and a == 1:
        sign = b
    elif key in ((2, 1), (4, 5)) and b == 1:
        sign = a
    elif key in ((1, 2), (5, 4)) and a == b:
        sign = a
    factor = None if sign is None else CyclotomicFactor(sign=sign, d=d)
    return TrinomialClass(n=n, m=m, a=a, b=b, factor=factor)


def cyclotomic_resultant(n: int, m: int, a: int, b: int) -> int:
    """Res(g(x**d), h(x**d)) = ((n**2 - mn + m**2) / (3 d**2))**d.

    Only defined when ljunggren_classify reports a factor; the division by
    3*d**2 is exact in every reducible case (asserted).
    """
    verdict = ljunggren_classify(n, m, a, b)
    if verdict.is_irreducible:
        raise PreconditionFailed(f"x**{n} {a:+d}x**{m} {b:+d} is irreducible")
    d = verdict.factor.d
    q, rem = divmod(n * n - m * n + m * m, 3 * d * d)
    if rem:
        raise PreconditionFailed("quadratic form not divisible by 3*d**2")
    return q**d


def strange_divisibility_check(k: int) -> bool:
    """With n = 6k+2: does ((n**2 - n + 1)/3)**2 divide n**n - (n-1)**(n-1)?

    True for every k; this runs the verification rather than assuming it.
    """
    if k < 0:
        raise InvalidArgument("k must be nonnegative")
    n = 6 * k + 2
    m = 12 * k * k + 6 * k + 1
    m2 = m * m
    return (pow(n, n, m2) - pow(n - 1, n - 1, m2)) % m2 == 0


def _square_divides_b(k: int) -> bool:
    """Exact check that M**2 | n**n - (n-1)**(n-1) for n = 8**(7**k).

    Uses n**3 = -1 + 3(n+1)M and (n-1)**3 = 1 + 3(n-2)M (exact identities
    with M = (n**2-n+1)/3), which collapse the giant exponentiations into
    j*(n**3 + 2n**2 - 3n + 2) == 1 mod M with j = (n-2)/3.  Only M-sized
    arithmetic remains, so the check reaches k = 7 comfortably.
    """
    n = 8 ** (7**k)
    m_mod, rem = divmod(n * n - n + 1, 3)
    if rem:
        raise PreconditionFailed("n**2 - n + 1 must be divisible by 3")
    if m_mod == 1:
        return True
    r = pow(8, 7**k, 3 * m_mod)  # n mod 3M
    j = ((r - 2) // 3) % m_mod   # (n-2)/3 mod M; valid since 3 | n-2
    nm = r % m_mod
    q = (nm * nm % m_mod * nm + 2 * nm * nm - 3 * nm + 2) % m_mod
    return j * q % m_mod == 1


@dataclass(frozen=True)
class AbcReport:
    """Verified facts about the relatively prime triple built from n = 8**(7**k):
    a = (n-1)**(n-1), b = n**n - (n-1)**(n-1), c = n**n."""

    k: int
    n: int | None
    n_log10: float
    seven_power: bool
    square_divides_b: bool | None
    bound_log: mpmath.mpf
    note: str


def abc_report(k: int) -> AbcReport:
    """Check the divisibilities behind the radical bound R(abc) < 6b/(7**k n).

    seven_power: 7**(k+1) divides n - 1 (via modular exponentiation).
    square_divides_b: ((n**2-n+1)/3)**2 divides b, checked exactly for
    k <= 7 and skipped (None) above, where even the modulus cannot be held
    in memory.  The radical itself has astronomically many digits, so the
    radical bound 6*log(8)*c/log(c) is reported only as its natural log.
    """
    if k < 0:
        raise InvalidArgument("k must be nonnegative")
    if k > ABC_MAX_K:
        raise SizeGuard(f"k = {k} exceeds the supported limit {ABC_MAX_K}")
    seven_power = pow(8, 7**k, 7 ** (k + 1)) == 1

    if k <= ABC_SQUARE_CHECK_MAX_K:
        square = _square_divides_b(k)
        note = "radical not computable at this scale; bound reported in log form"
    else:
        square = None
        note = (
            "square-divisor check skipped: modulus (n**2-n+1)/3 too large; "
            "radical bound reported in log form"
        )

    with mpmath.workdps(30):
        n_mp = mpmath.power(8, 7**k)
        log_c = n_mp * mpmath.log(n_mp)  # log of c = n**n
        bound_log = mpmath.log(6 * mpmath.log(8)) + log_c - mpmath.log(log_c)
        n_log10 = float(7**k * 3 * mpmath.log(2, 10))

    return AbcReport(
        k=k,
        n=8 ** (7**k) if k <= 3 else None,
        n_log10=n_log10,
        seven_power=seven_power,
        square_divides_b=square,
        bound_log=bound_log,
        note=note,
    )
