#!/usr/bin/env python3
"""How square divisors of n^n + eps*(n-m)^(n-m)*m^m correspond to
consecutive p-th powers, walked through on the first real examples."""

from trinodisc import (
    a_set,
    alpha,
    b_set,
    beta,
    d_eps_divisible,
    in_p,
    in_p_cons,
    in_p_tilde,
    sixth_root_pairs,
)

print("130^130 + 129^129 is divisible by 83^2:")
print(f"  d_eps_divisible(83, 130, 1, +1) = {d_eps_divisible(83, 130, 1, 1)}")
print("and the property only depends on n mod 83*82 = 6806:")
print(f"  same at n=130+6806: {d_eps_divisible(83, 130 + 6806, 1, 1)}\n")

w = alpha(83, 1, 1, 130)
print(f"alpha maps the class 130 to a witness pair: x={w.x}, k={w.k}")
print(f"  x and x-1 are consecutive 83rd powers mod 83^2 = 6889")
print(f"beta inverts it: beta(x, k) = {beta(83, 1, 1, w.x, w.k)}\n")

print("For p=7, m=1 the full sets on both sides:")
for eps in (1, -1):
    A = a_set(7, 1, eps)
    B = [(v.x, v.k) for v in b_set(7, 1, eps)]
    print(f"  eps={eps:+d}:  classes {list(A)} mod 42  <->  witnesses {B}")
print("  (49 | 5^5 + 4^4 and 49 | 17^17 + 16^16, matching classes 5 and 17)\n")

print("Membership with constructed witnesses (discrete-log route):")
for p in (5, 7, 59):
    for eps in (1, -1):
        member, witness = in_p(p, eps)
        print(f"  p={p:3d} eps={eps:+d}: member={member} witness={witness}")
print()

print("Sixth roots of unity force pairs for every p = 1 mod 6, e.g. p=7:")
print(f"  {[(c.lo, c.hi) for c in sixth_root_pairs(7)]}")
print("so p=7 is a member, but not once sixth-root pairs are set aside:")
print(f"  in_p_cons(7) = {in_p_cons(7)}, in_p_tilde(7) = {in_p_tilde(7)}")
print(f"  in_p_tilde(59) = {in_p_tilde(59)}, in_p_tilde(79) = {in_p_tilde(79)}")
print("59 and 79 are the two smallest primes with sporadic pairs.")
