#!/usr/bin/env python3
"""Tour of consecutive p-th powers mod p**2 and the orbit structure of the
roots that index them."""

from trinodisc import (
    classify_roots,
    consecutive_pairs,
    fp_roots,
    is_wieferich,
    orbit_of,
    primes_list,
)

print("Roots of ((x+1)^p - x^p - 1)/p mod p index pairs of consecutive")
print("p-th powers mod p^2.  The smallest prime with a nontrivial pair:\n")

for p in primes_list(3, 20):
    pairs = [(c.lo, c.hi) for c in consecutive_pairs(p)]
    print(f"  p={p:3d}  roots={fp_roots(p)}  nontrivial pairs={pairs}")

print("\nFor p=7: 2^7 = 30 and 3^7 = 31 mod 49 are consecutive seventh powers.")

print("\nRoots are preserved by x -> -x-1 and x -> 1/x, generating orbits of")
print("six.  Apart from three degenerate orbits, roots come in 'six-packs':")
print(f"  orbit of 2 mod 13: {sorted(set(orbit_of(13, 2)))}")
print(f"  orbit of 1 mod 13 (the Wieferich orbit): {sorted(set(orbit_of(13, 1)))}")

print("\nCensus of a few primes (trivial/cyclotomic/Wieferich/six-packs):")
for p in (59, 79, 83, 101, 1093, 3511):
    c = classify_roots(p, fp_roots(p))
    tag = "  <- Wieferich prime" if is_wieferich(p) else ""
    print(f"  p={p:5d}  total={c.total:3d}  [{c.trivial}, {c.cyclotomic}, "
          f"{c.wieferich}, {c.sixpacks} packs]{tag}")

print("\n59 is the first prime whose pairs are not explained by sixth roots")
print("of unity; its 14 roots hold two full six-packs.")
