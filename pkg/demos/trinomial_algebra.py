#!/usr/bin/env python3
"""Exact trinomial algebra: discriminants, cyclotomic factors, a strange
divisibility family, and the abc triples it generates."""

import mpmath

from trinodisc import (
    Poly,
    abc_report,
    cyclotomic_resultant,
    d_value,
    discriminant,
    ljunggren_classify,
    strange_divisibility_check,
    trinomial_discriminant,
)

print("The discriminant of x^n - x - 1 equals n^n + (-1)^n (n-1)^(n-1):")
for n in range(2, 9):
    disc = discriminant(Poly.trinomial(n, 1, -1, -1))
    eps = 1 if n % 2 == 0 else -1
    print(f"  n={n}: |disc| = {abs(disc)} = d_value(n,1,{eps:+d})"
          f" -> {abs(disc) == d_value(n, 1, eps)}")

print("\nx^n + a x^m + b is irreducible except in six residue patterns")
print("mod 6, where a quadratic cyclotomic factor splits off:")
for (n, m, a, b) in [(7, 5, 1, 1), (8, 1, -1, 1), (7, 2, -1, -1), (14, 10, 1, 1)]:
    c = ljunggren_classify(n, m, a, b)
    sgn = "+" if a > 0 else "-"
    sgn2 = "+" if b > 0 else "-"
    g = c.factor.g_poly()
    r = cyclotomic_resultant(n, m, a, b)
    print(f"  x^{n} {sgn} x^{m} {sgn2} 1 = g*h with g coeffs {list(g.coeffs)}, "
          f"Res(g,h) = {r}")
print(f"  x^n - x - 1 stays irreducible: "
      f"{all(ljunggren_classify(n, 1, -1, -1).is_irreducible for n in range(2, 60))}")

print("\nThe squared resultant divides the trinomial value, giving for")
print("n = 2 mod 6 the divisibility ((n^2-n+1)/3)^2 | n^n - (n-1)^(n-1):")
for k in (1, 2, 3):
    n = 6 * k + 2
    M = (n * n - n + 1) // 3
    print(f"  k={k}: {M}^2 | {n}^{n} - {n-1}^{n-1}  -> "
          f"{strange_divisibility_check(k)}")
print(f"  holds for every k <= 2000: "
      f"{all(strange_divisibility_check(k) for k in range(2001))}")

print("\nWith n = 8^(7^k) this yields abc triples (a, b, c) = ")
print("((n-1)^(n-1), n^n - (n-1)^(n-1), n^n) with small radicals:")
for k in (0, 1, 2, 3):
    r = abc_report(k)
    n_str = str(r.n) if r.n is not None else f"about 10^{r.n_log10:.0f}"
    print(f"  k={k}: n = {n_str}; 7^{k+1} | n-1: {r.seven_power}; "
          f"M^2 | b: {r.square_divides_b}")
r = abc_report(5)
print(f"  k=5: log of the radical bound 6*log(8)*c/log(c) = "
      f"{mpmath.nstr(r.bound_log, 8)}")
print(f"       ({r.note})")
