"""Square divisors of n**n + eps*(n-m)**(n-m)*m**m and consecutive p-th powers.

For a fixed odd prime p, sign eps and multiplier m (p not dividing m), the
residue classes n mod p*(p-1) whose trinomial value is divisible by p**2
correspond one-to-one with pairs (x mod p**2, k mod p-1) where x is a
nonzero p-th power satisfying x**k == -eps*(1-x)**m mod p**2.  Both
directions of that correspondence are explicit and cheap, which is what
makes large prime scans affordable: the witness side is searchable in
O(p) per prime instead of O(p**2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import (
    InvalidArgument,
    PreconditionFailed,
    WitnessConstructionFailure,
)
from .fproots import ConsecutivePair, consecutive_pairs, fp_roots
from .modarith import (
    PrimeContext,
    context,
    invmod,
    is_pth_power,
    mult_order,
    powmod,
    primitive_root,
    pth_power_lift,
)
from .primes import factorize


class PairWitness(NamedTuple):
    """An element (x mod p**2, k mod p-1) with x**k == -eps*(1-x)**m."""

    x: int
    k: int
    eps: int
    m: int


@dataclass(frozen=True)
class ResidueSet:
    """All n mod p*(p-1) with p**2 dividing the signed trinomial value."""

    p: int
    m: int
    eps: int
    residues: tuple[int, ...]

    @property
    def modulus(self) -> int:
        return self.p * (self.p - 1)

    def __len__(self) -> int:
        return len(self.residues)

    def __iter__(self):
        return iter(self.residues)

    def __contains__(self, n: int) -> bool:
        return n % self.modulus in self.residues


def _check_sign(eps: int) -> int:
    if eps not in (1, -1):
        raise InvalidArgument(f"eps must be +1 or -1, got {eps}")
    return eps


def d_eps_divisible(p: int, n: int, m: int, eps: int) -> bool:
    """Does p**2 divide n**n + eps*(n-m)**(n-m)*m**m?

    n may be any representative of its class mod p*(p-1): membership only
    depends on that class, so exponents are reduced by Euler wherever the
    base is coprime to p.  When p divides n or n-m the value is never
    divisible by p (p does not divide m by precondition), so those classes
    answer False outright.
    """
    _check_sign(eps)
    ctx = context(p)
    if m % p == 0:
        raise InvalidArgument(f"m = {m} must not be divisible by p = {p}")
    if n % p == 0 or (n - m) % p == 0:
        return False
    order = ctx.mod_order
    t1 = pow(n % ctx.p2, n % order, ctx.p2)
    t2 = pow((n - m) % ctx.p2, (n - m) % order, ctx.p2)
    t3 = pow(m % ctx.p2, m % order, ctx.p2)
    return (t1 + eps * t2 * t3) % ctx.p2 == 0


def witness_holds(p: int, m: int, eps: int, x: int, k: int) -> bool:
    """Check the defining congruence x**k == -eps*(1-x)**m mod p**2."""
    ctx = context(p)
    if not is_pth_power(ctx, x):
        return False
    lhs = pow(x, k, ctx.p2)
    rhs = (-eps * pow((1 - x) % ctx.p2, m, ctx.p2)) % ctx.p2
    return lhs == rhs


def alpha(p: int, m: int, eps: int, n: int) -> PairWitness:
    """Map a divisible residue class n to its witness (x, k).

    x is the p-th power lift of 1 - m/n mod p and k = m - n mod p-1
    (stored as p-1 when the reduction lands on zero).
    """
    _check_sign(eps)
    ctx = context(p)
    if m % p == 0 or n % p == 0:
        raise PreconditionFailed(f"p = {p} must divide neither m nor n")
    if not d_eps_divisible(p, n, m, eps):
        raise PreconditionFailed(
            f"p**2 does not divide the value at (n={n}, m={m}, eps={eps:+d})"
        )
    x0 = (1 - m * invmod(n % p, p)) % p
    x = pth_power_lift(ctx, x0)
    k = (m - n) % (p - 1)
    if k == 0:
        k = p - 1
    return PairWitness(x=x, k=k, eps=eps, m=m)


def beta(p: int, m: int, eps: int, x: int, k: int) -> int:
    """Map a witness (x, k) back to its residue class n mod p*(p-1)."""
    _check_sign(eps)
    ctx = context(p)
    if not witness_holds(p, m, eps, x, k):
        raise PreconditionFailed(
            f"(x={x}, k={k}) is not a witness for (p={p}, m={m}, eps={eps:+d})"
        )
    inv_one_minus_x = invmod((1 - x) % ctx.p2, ctx.p2)
    n = ((m - k) * p - m * inv_one_minus_x * (p - 1)) % ctx.mod_order
    return n


def _pair_witness_exponents(ctx: PrimeContext, x: int, m: int,
                            p1_factors: dict[int, int]) -> tuple[int, int | None, int | None]:
    """Base solutions k in 1..order(x) of x**k == -+(1-x)**m, for both signs.

    Returns (order, k for eps=+1, k for eps=-1); each k is None when the
    congruence has no solution.  Solutions repeat with period order(x).
    """
    p2 = ctx.p2
    order = mult_order(x, p2, ctx.p - 1, p1_factors)
    base = pow((1 - x) % p2, m, p2)
    target_plus = (-base) % p2   # eps = +1
    target_minus = base % p2     # eps = -1
    k_plus = k_minus = None
    cur = 1
    for k in range(1, order + 1):
        cur = cur * x % p2
        if cur == target_plus:
            k_plus = k
        elif cur == target_minus:
            k_minus = k
    return order, k_plus, k_minus


def _scan_witnesses(p: int, m: int) -> tuple[list[PairWitness], list[PairWitness]]:
    """All witnesses over the nontrivial consecutive pairs, for both signs."""
    ctx = context(p)
    if m % p == 0:
        raise InvalidArgument(f"m = {m} must not be divisible by p = {p}")
    p1_factors = factorize(p - 1)
    plus: list[PairWitness] = []
    minus: list[PairWitness] = []
    for pair in consecutive_pairs(p):
        x = pair.hi
        order, k_plus, k_minus = _pair_witness_exponents(ctx, x, m, p1_factors)
        if k_plus is not None:
            plus.extend(PairWitness(x, k, 1, m)
                        for k in range(k_plus, p, order))
        if k_minus is not None:
            minus.extend(PairWitness(x, k, -1, m)
                         for k in range(k_minus, p, order))
    return plus, minus


def b_set(p: int, m: int, eps: int) -> list[PairWitness]:
    """Every witness (x, k), k in 1..p-1, for the given sign and multiplier.

    Each nontrivial consecutive pair contributes its upper element x; the
    exponent scan runs only to the multiplicative order of x and unfolds
    periodically from there.
    """
    _check_sign(eps)
    plus, minus = _scan_witnesses(p, m)
    return plus if eps == 1 else minus


def a_set(p: int, m: int, eps: int) -> ResidueSet:
    """The divisible residue classes, computed through the witness side."""
    witnesses = b_set(p, m, eps)
    residues = sorted(beta(p, m, eps, w.x, w.k) for w in witnesses)
    return ResidueSet(p=p, m=m, eps=eps, residues=tuple(residues))


def in_p_cons(p: int) -> bool:
    """Does p admit a nontrivial pair of consecutive p-th powers mod p**2?"""
    if p == 2:
        return False
    return len(fp_roots(p)) > 2


def bsgs(base: int, target: int, modulus: int, order: int) -> int:
    """Least nonnegative discrete log of target to the given base.

    Baby-step giant-step with a table of ~sqrt(order) entries; raises
    PreconditionFailed when target is outside the subgroup.
    """
    steps = math.isqrt(order) + 1
    table: dict[int, int] = {}
    cur = 1
    for j in range(steps):
        table.setdefault(cur, j)
        cur = cur * base % modulus
    giant = invmod(cur, modulus)  # base**(-steps)
    gamma = target % modulus
    for i in range(steps):
        if gamma in table:
            return i * steps + table[gamma]
        gamma = gamma * giant % modulus
    raise PreconditionFailed(f"{target} has no discrete log to base {base}")


def _even_order_power(ctx: PrimeContext, y: int,
                      p1_factors: dict[int, int]) -> int:
    """From a nontrivial root y, pick x with x and 1-x nonzero p-th powers
    and 1-x of even order mod p**2."""
    p = ctx.p
    if mult_order((y + 1) % p, p, p - 1, p1_factors) % 2 == 0:
        return pth_power_lift(ctx, (-y) % p)
    if mult_order((-y) % p, p, p - 1, p1_factors) % 2 == 0:
        return pth_power_lift(ctx, (y + 1) % p)
    # Both y+1 and -y of odd order: their quotient -(1+1/y) is of odd order
    # too, forcing 1 + 1/y into even order.
    z = invmod(y % p, p)
    return pth_power_lift(ctx, (-z) % p)


def in_p(p: int, eps: int) -> tuple[bool, tuple[int, int] | None]:
    """Membership plus an explicit verified witness (n, m).

    The boolean agrees with in_p_cons for every odd prime.  When true, a
    pair (n, m) with p**2 dividing the signed value is built from discrete
    logarithms of a suitable consecutive-power witness and re-verified with
    d_eps_divisible before being returned.
    """
    _check_sign(eps)
    if p == 2:
        return False, None
    ctx = context(p)
    if not in_p_cons(p):
        return False, None
    p1_factors = factorize(p - 1)
    y = min(x for x in fp_roots(p) if x not in (0, p - 1))
    x = _even_order_power(ctx, y, p1_factors)

    g = primitive_root(p)
    log_x = bsgs(g, x, ctx.p2, ctx.mod_order)
    log_1mx = bsgs(g, (1 - x) % ctx.p2, ctx.p2, ctx.mod_order)
    if log_x % p or log_1mx % p:
        raise WitnessConstructionFailure(
            f"p={p}: discrete logs of p-th powers must be multiples of p"
        )
    j = log_x // p
    k = log_1mx // p
    order_1mx = mult_order((1 - x) % ctx.p2, ctx.p2, p - 1, p1_factors)
    if order_1mx % 2:
        raise WitnessConstructionFailure(f"p={p}: 1-x came out with odd order")
    t = order_1mx // 2

    if eps == -1:
        m = j
    else:
        m = (j - t) % (p - 1)
        if m == 0:
            m = p - 1
    k %= p - 1
    if k == 0:
        k = p - 1

    n = beta(p, m, eps, x, k)
    if not d_eps_divisible(p, n, m, eps):
        raise WitnessConstructionFailure(
            f"p={p}, eps={eps:+d}: constructed witness (n={n}, m={m}) failed"
        )
    return True, (n, m)


def in_p_tilde(p: int) -> bool:
    """Nontrivial consecutive powers beyond those forced by sixth roots of unity.

    A root is discounted when it is trivial (0 or p-1) or a primitive cube
    root of unity; cube-root sources generate exactly the sixth-root pairs.
    """
    if p == 2:
        return False
    return any(
        x not in (0, p - 1) and (x * x + x + 1) % p != 0
        for x in fp_roots(p)
    )


def sixth_root_pairs(p: int) -> list[ConsecutivePair]:
    """The two consecutive pairs (x-1, x) with x a primitive sixth root mod p**2."""
    if p % 6 != 1:
        raise InvalidArgument(f"p = {p} is not 1 mod 6, no sixth roots of unity")
    ctx = context(p)
    g = primitive_root(p)
    w = pow(g, ctx.mod_order // 6, ctx.p2)
    pairs = []
    for x in sorted((w, invmod(w, ctx.p2))):
        if (x * x - x + 1) % ctx.p2:
            raise WitnessConstructionFailure(f"p={p}: {x} is not a sixth root")
        pairs.append(ConsecutivePair(lo=x - 1, hi=x, source_root=(x - 1) % p))
    return pairs


def quadratic_form_divisible(p: int, n: int, m: int) -> bool:
    """Literal test: does p**2 divide (n**2 - n*m + m**2) / gcd(n, m)**2?

    Diagnostic only.  This reading depends on the integer representative n,
    not just its class mod p*(p-1), so the sporadic/sixth-root distinction
    is made by pair classification instead (see in_p_tilde); the predicate
    is exposed for cross-checking individual (n, m) pairs.
    """
    ctx = context(p)
    g = math.gcd(n, m)
    q = (n * n - n * m + m * m) // (g * g)
    return q % ctx.p2 == 0


def is_sixth_root_pair(p: int, pair: ConsecutivePair) -> bool:
    """Is the pair's upper element a primitive sixth root of unity mod p**2?"""
    ctx = context(p)
    x = pair.hi
    return (x * x - x + 1) % ctx.p2 == 0


__all__ = [
    "PairWitness",
    "ResidueSet",
    "a_set",
    "alpha",
    "b_set",
    "beta",
    "bsgs",
    "d_eps_divisible",
    "in_p",
    "in_p_cons",
    "in_p_tilde",
    "is_sixth_root_pair",
    "quadratic_form_divisible",
    "sixth_root_pairs",
    "witness_holds",
]
