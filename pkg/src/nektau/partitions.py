"""Young-diagram combinatorics and per-box instanton weight factors.

Partitions are tuples of weakly decreasing positive integers.  Arm/leg
lengths are evaluated with the conjugate-profile rule and may be negative
(boxes of one diagram measured against another diagram's profile).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .rationals import GaussianRational
from .symbols import SymExpr, ZeroFactor, rational_power

Frac = Fraction


@lru_cache(maxsize=None)
def partitions_of(n: int):
    """All partitions of n as sorted tuples, lexicographically descending."""
    if n == 0:
        return ((),)
    out = []

    def rec(rem, maxpart, prefix):
        if rem == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(rem, maxpart), 0, -1):
            prefix.append(p)
            rec(rem - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


def enumerate_pairs(d: int):
    """All partition pairs with total size d, ordered by (|first|, first, second)."""
    for d1 in range(d + 1):
        for lam1 in partitions_of(d1):
            for lam2 in partitions_of(d - d1):
                yield (lam1, lam2)


def conjugate(lam):
    if not lam:
        return ()
    out = []
    for j in range(1, lam[0] + 1):
        out.append(sum(1 for p in lam if p >= j))
    return tuple(out)


def arm_leg(lam, box):
    """(arm, leg) of box (i, j) (1-based) relative to lam; may be negative."""
    i, j = box
    row = lam[i - 1] if i <= len(lam) else 0
    col = sum(1 for p in lam if p >= j)
    return row - j, col - i


def boxes(lam):
    for i, p in enumerate(lam, start=1):
        for j in range(1, p + 1):
            yield (i, j)


def n_factor_4d(lam, mu, a: Frac, e1: Frac, e2: Frac) -> Frac:
    """Pair factor: prod over lam-boxes of (a - e2(arm_mu+1) + e1 leg_lam)
    times prod over mu-boxes of (a + e2 arm_lam - e1(leg_mu+1))."""
    out = Frac(1)
    for s in boxes(lam):
        am, _ = arm_leg(mu, s)
        _, ll = arm_leg(lam, s)
        f = a - e2 * (am + 1) + e1 * ll
        if not f:
            raise ZeroFactor(f"4d factor vanished at box {s} of {lam}/{mu}")
        out *= f
    for s in boxes(mu):
        al, _ = arm_leg(lam, s)
        _, lm = arm_leg(mu, s)
        f = a + e2 * al - e1 * (lm + 1)
        if not f:
            raise ZeroFactor(f"4d factor vanished at box {s} of {lam}/{mu}")
        out *= f
    return out


def n_factor_5d(lam, mu, u_coef: GaussianRational, u_texp: Frac,
                E1: Frac, E2: Frac, t: Frac) -> GaussianRational:
    """Pair factor: prod (1 - u q2^{-arm_mu-1} q1^{leg_lam}) * prod over mu.

    The multiplicative argument is u = u_coef * t^{u_texp}; q_i = t^{E_i}.
    All exponents must land on integers (enforced), so the result is an
    exact Gaussian rational.
    """
    out = GaussianRational(1)
    for s in boxes(lam):
        am, _ = arm_leg(mu, s)
        _, ll = arm_leg(lam, s)
        e = u_texp + E2 * (-am - 1) + E1 * ll
        if e.denominator != 1:
            raise ValueError(f"non-integer t-exponent {e} in 5d factor")
        f = GaussianRational(1) - u_coef * (t ** e.numerator)
        if not f:
            raise ZeroFactor(f"5d factor vanished at box {s} of {lam}/{mu}")
        out = out * f
    for s in boxes(mu):
        al, _ = arm_leg(lam, s)
        _, lm = arm_leg(mu, s)
        e = u_texp + E2 * al + E1 * (-lm - 1)
        if e.denominator != 1:
            raise ValueError(f"non-integer t-exponent {e} in 5d factor")
        f = GaussianRational(1) - u_coef * (t ** e.numerator)
        if not f:
            raise ZeroFactor(f"5d factor vanished at box {s} of {lam}/{mu}")
        out = out * f
    return out


def cs_weight(lam, m: int, u_coef: GaussianRational, u_texp: Frac,
              E1: Frac, E2: Frac, t: Frac) -> SymExpr:
    """T_lam(u)^m * (q1 q2)^{-m|lam|/2} with T_lam = prod u^-1 q1^{1-i} q2^{1-j}."""
    if not (0 <= m <= 2):
        raise ValueError("Chern-Simons level must be 0, 1 or 2")
    if m == 0 or not lam:
        return SymExpr.one()
    size = sum(lam)
    s1 = sum(1 - i for i, _ in boxes(lam))
    s2 = sum(1 - j for _, j in boxes(lam))
    texp = m * (-size * u_texp + E1 * s1 + E2 * s2) - Frac(m * size, 2) * (E1 + E2)
    coef = (u_coef.inverse()) ** (m * size)
    return rational_power(t, texp) * coef
