"""Truncated q-Pochhammer and theta series plus closed-form series fixtures.

A multi-base Pochhammer (w; q_1, .., q_N)_inf with w = coeff * z^zpow and
q_k = t^{b_k} is expanded as an exact PuiseuxSeries by two independent
routes (exponential formula and base-peeling recursion); bases with
|q_k| > 1 (negative t-exponent) are first rewritten through the inversion
rule (w; q^{-1}, ..) = (w q; q, ..)^{-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .series import PuiseuxSeries
from .symbols import SymExpr

Frac = Fraction


class UnsupportedRegion(Exception):
    """Base exponent 0 (root of unity) or non-lattice exponent."""


def _frac(x):
    return x if isinstance(x, Frac) else Frac(x)


@dataclass(frozen=True)
class PochhammerSpec:
    """(coeff * z^zpow ; t^{b_1}, .., t^{b_N})_inf.

    coeff is a single-monomial exact coefficient; zpow must be positive so
    that truncation in z is finite; bases are nonzero integer t-exponents.
    """

    coeff: object
    zpow: Frac
    bases: tuple

    def __post_init__(self):
        object.__setattr__(self, "zpow", _frac(self.zpow))
        object.__setattr__(self, "bases", tuple(_frac(b) for b in self.bases))
        if self.zpow <= 0:
            raise UnsupportedRegion("need a positive z-power in the argument")
        for b in self.bases:
            if not b:
                raise UnsupportedRegion("base exponent 0: base degenerates to 1")
            if b.denominator != 1:
                raise UnsupportedRegion(f"base t-exponent {b} is not an integer")


def _tpow(t: Frac, e: Frac) -> Frac:
    if e.denominator != 1:
        raise UnsupportedRegion(f"non-integer t-exponent {e}")
    return t ** e.numerator


@lru_cache(maxsize=None)
def _poch_base_coeffs(bases, t: Frac, mmax: int):
    """Coefficients g_0..g_mmax of (w; t^{b_1}, ..)_inf as a w-series,
    for bases with positive exponents, by peeling the first base:
    (w; q1, rest) = (w; rest) * (w q1; q1, rest)."""
    if not bases:
        return (Frac(1), Frac(-1)) + (Frac(0),) * max(0, mmax - 1)
    b1, rest = bases[0], bases[1:]
    h = _poch_base_coeffs(rest, t, mmax)
    q1 = _tpow(t, b1)
    g = [Frac(1)]
    for m in range(1, mmax + 1):
        q1m = q1**m
        acc = Frac(0)
        for j in range(1, min(m, len(h) - 1) + 1):
            if h[j]:
                acc += h[j] * q1 ** (m - j) * g[m - j]
        g.append(acc / (1 - q1m))
    return tuple(g)


def _poch_exp_coeffs(bases, t: Frac, mmax: int):
    """Same coefficients from the exponential formula
    log = -sum_m w^m / (m * prod_k (1 - q_k^m))."""
    if mmax < 1:
        return (Frac(1),)
    log_coeffs = {}
    for m in range(1, mmax + 1):
        denom = Frac(m)
        for b in bases:
            qm = _tpow(t, b) ** m
            if qm == 1:
                raise UnsupportedRegion("base is a root of unity")
            denom *= 1 - qm
        log_coeffs[Frac(m)] = Frac(-1) / denom
    ps = PuiseuxSeries(log_coeffs, Frac(mmax)).exp()
    return tuple(
        c.rational_value() if (c := ps.coeff(m)) else Frac(0) for m in range(mmax + 1)
    )


def pochhammer_series(spec: PochhammerSpec, t: Frac, E, route: str = "shift") -> PuiseuxSeries:
    """Exact truncated expansion of the multi-base Pochhammer symbol.

    route: "shift" peels bases by the one-step shift rule; "exp" uses the
    exponential formula.  Bases with negative exponent are rewritten by the
    inversion rule before either route runs.
    """
    E = _frac(E)
    neg = [b for b in spec.bases if b < 0]
    if neg:
        # (w; q^{-1}, ..) = (w q; q, ..)^{-1}, applied per negative base
        coeff = SymExpr.coerce(spec.coeff)
        total_shift = Frac(0)
        for b in neg:
            total_shift += -b
        pos = tuple(-b if b < 0 else b for b in spec.bases)
        coeff = coeff * SymExpr.from_rational(_tpow(t, total_shift))
        inner = pochhammer_series(
            PochhammerSpec(coeff, spec.zpow, pos), t, E, route
        )
        out = inner
        for _ in range(len(neg)):
            out = out.inverse()
        return out.truncate(E)

    mmax = int(E / spec.zpow)
    if route == "shift":
        base_coeffs = _poch_base_coeffs(spec.bases, t, mmax)
    elif route == "exp":
        base_coeffs = _poch_exp_coeffs(spec.bases, t, mmax)
    else:
        raise ValueError(f"unknown route {route!r}")
    coeff = SymExpr.coerce(spec.coeff)
    out = {}
    cpow = SymExpr.one()
    for m in range(mmax + 1):
        if base_coeffs[m]:
            out[m * spec.zpow] = cpow * base_coeffs[m]
        if m < mmax:
            cpow = cpow * coeff
    return PuiseuxSeries(out, E)


# ---------------------------------------------------------------------------
# theta with a z-weighted base (bilateral sum truncates on the lattice)
# ---------------------------------------------------------------------------


def theta_z_series(arg_coeff, arg_zpow, base_coeff, base_zpow, E,
                   route: str = "product") -> PuiseuxSeries:
    """theta(w; p) with w = arg_coeff z^{arg_zpow}, p = base_coeff z^{base_zpow}.

    The base must carry a positive z-weight so both the doubly infinite
    product (w;p)(p/w;p) and the bilateral Jacobi sum truncate exactly.
    """
    E = _frac(E)
    a, r = _frac(arg_zpow), _frac(base_zpow)
    if r <= 0:
        raise UnsupportedRegion("theta base needs a positive z-weight")
    cw = SymExpr.coerce(arg_coeff)
    cp = SymExpr.coerce(base_coeff)
    if route == "product":
        # finite product of exact binomial factors; negative exponents
        # allowed, so collect factors through E minus the total negative
        # valuation (those still reach exponents <= E in the product)
        neg_val = sum(
            min(e, 0) for e in
            [a + k * r for k in range(int(max(0, -a) / r) + 1)]
            + [(k + 1) * r - a for k in range(int(max(0, a) / r) + 1)]
        )
        bound = E - neg_val
        factors = []
        k = 0
        while a + k * r <= bound:
            factors.append((a + k * r, cw * cp**k))
            k += 1
        k = 0
        while (k + 1) * r - a <= bound:
            factors.append(((k + 1) * r - a, cp ** (k + 1) * cw.inverse()))
            k += 1
        trunc = bound
        out = PuiseuxSeries.one(trunc)
        for e, c in factors:
            if e == 0:
                # constant factor: the two dict keys would collide
                out = out.scale(SymExpr.one() - c)
            else:
                out = out * PuiseuxSeries({Frac(0): SymExpr.one(), e: -c}, trunc)
        return out.truncate(E)
    if route == "jacobi":
        # (p;p)_inf^{-1} sum_k (-1)^k p^{k(k-1)/2} w^k; the exponent
        # e(k) = k a + k(k-1)/2 r grows quadratically in both directions
        neg_val = Frac(0)
        terms = {}
        for direction in (1, -1):
            k = 0 if direction == 1 else -1
            while True:
                e = k * a + Frac(k * (k - 1), 2) * r
                if e <= E:
                    cwk = cw**k if k >= 0 else cw.inverse() ** (-k)
                    pk = Frac(k * (k - 1), 2)
                    cpk = cp ** pk.numerator if pk.denominator == 1 else None
                    if cpk is None:
                        raise UnsupportedRegion("half-integer base power in Jacobi sum")
                    c = SymExpr.from_rational(Frac((-1) ** k)) * cwk * cpk
                    terms[e] = terms.get(e, SymExpr.zero()) + c
                    neg_val = min(neg_val, e)
                elif (2 * k - 1) * r * direction > 2 * (abs(a) + 1):
                    # past the parabola vertex and above the bound: done
                    break
                k += direction
        summ = PuiseuxSeries(terms, E)
        # (p;p)_inf: argument equals the base, z-weighted, finite product
        pp = PuiseuxSeries.one(E - neg_val)
        j = 1
        while j * r <= E - neg_val:
            pp = pp * PuiseuxSeries(
                {Frac(0): SymExpr.one(), j * r: -(cp**j)}, E - neg_val
            )
            j += 1
        return (summ * pp.inverse()).truncate(E)
    raise ValueError(f"unknown route {route!r}")


# ---------------------------------------------------------------------------
# closed-form series fixtures (algebraic solutions)
# ---------------------------------------------------------------------------


def _exp_monomial(c, e, E) -> PuiseuxSeries:
    return PuiseuxSeries({_frac(e): SymExpr.coerce(c)}, _frac(E)).exp()


def algebraic_fixture(name: str, E, *, sample=None, sign: int = 1,
                      wrong_branch: bool = False) -> PuiseuxSeries:
    """Closed-form truncated series solving the continuous / q Toda systems.

    names:
      P3_tau_minus       z^{1/16} e^{-4 z^{1/2}}
      P3_tau_plus_branch z^{1/16} e^{+4 z^{1/2}}
      P3_taupm           z^{1/32} e^{sign*2 z^{1/4} - 2 z^{1/2}}
                         (wrong_branch flips the z^{1/2} term's sign)
      qP3_tau            z^{1/16} (s q^{1/2} z^{1/2}; q^{1/2}, q^{1/2})_inf
      qP3_taupm          z^{1/32} (q^{1/2} z^{1/2}; q^{1/2}, q)_inf
                                  / (sign q^{1/4} z^{1/4}; q^{1/2})_inf
    q-fixtures need a parameter sample (q = t^dq with 4 | dq).
    """
    E = _frac(E)
    if name == "P3_tau_minus":
        return _exp_monomial(-4, Frac(1, 2), E).shift(Frac(1, 16))
    if name == "P3_tau_plus_branch":
        return _exp_monomial(4, Frac(1, 2), E).shift(Frac(1, 16))
    if name == "P3_taupm":
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        s2 = 2 if wrong_branch else -2
        body = PuiseuxSeries(
            {Frac(1, 4): SymExpr.from_rational(Frac(2 * sign)),
             Frac(1, 2): SymExpr.from_rational(Frac(s2))}, E
        ).exp()
        return body.shift(Frac(1, 32))
    if sample is None:
        raise ValueError("q-fixtures need a parameter sample")
    t, dq = sample.t, sample.dq
    if name == "qP3_tau":
        s = Frac(sign) * _tpow(t, Frac(dq, 2))
        spec = PochhammerSpec(s, Frac(1, 2), (Frac(dq, 2), Frac(dq, 2)))
        return pochhammer_series(spec, t, E).shift(Frac(1, 16))
    if name == "qP3_taupm":
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        num = pochhammer_series(
            PochhammerSpec(_tpow(t, Frac(dq, 2)), Frac(1, 2), (Frac(dq, 2), Frac(dq))),
            t, E,
        )
        den = pochhammer_series(
            PochhammerSpec(Frac(sign) * _tpow(t, Frac(dq, 4)), Frac(1, 4), (Frac(dq, 2),)),
            t, E,
        )
        return (num * den.inverse()).truncate(E).shift(Frac(1, 32))
    raise ValueError(f"unknown fixture {name!r}")
