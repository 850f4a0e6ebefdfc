"""Gauge-theory building blocks: instanton sums, classical exponents,
one-loop cocycles, and relative partition-function assembly.

Everything is *relative*: a partition function is only ever used through
the ratio of its value at a shifted parameter to its value at a reference
point.  Classical parts become exact rational exponent gaps, and one-loop
parts become finite telescoping products of Gamma-, sine-, and
q-Pochhammer symbols, so the whole object lives in the exact coefficient
algebra.

Conventions: the series variable z carries four units of the mass scale
(scale^4 = z), all multiplicative parameters are powers of the sample base
t, and 4d equivariant parameters are literal rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .partitions import (
    cs_weight,
    enumerate_pairs,
    n_factor_4d,
    n_factor_5d,
)
from .rationals import GaussianRational
from .sampling import ParameterSample
from .series import PuiseuxSeries
from .symbols import (
    SymExpr,
    gamma_value,
    pi_power,
    poch_value,
    rational_power,
)

Frac = Fraction
HALF = Frac(1, 2)


class IncompleteModeRange(Exception):
    """The requested order needs lattice modes outside the assembled range."""


# ---------------------------------------------------------------------------
# instanton sums
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Theory4d:
    """Equivariant parameters of a 4d rank-2 theory."""

    e1: Frac
    e2: Frac


@dataclass(frozen=True)
class Theory5d:
    """Multiplicative parameters q_i = t^{E_i} plus a level-m modifier."""

    E1: Frac
    E2: Frac
    m: int = 0


@lru_cache(maxsize=None)
def inst_coeff_4d(e1: Frac, e2: Frac, a: Frac, d: int) -> Frac:
    """Coefficient of z^d: sum over partition pairs of the inverse
    product of the four pair factors at arguments (0, a, -a, 0)."""
    total = Frac(0)
    for lam1, lam2 in enumerate_pairs(d):
        den = (
            n_factor_4d(lam1, lam1, Frac(0), e1, e2)
            * n_factor_4d(lam1, lam2, a, e1, e2)
            * n_factor_4d(lam2, lam1, -a, e1, e2)
            * n_factor_4d(lam2, lam2, Frac(0), e1, e2)
        )
        total += 1 / den
    return total


def inst_series_4d(th: Theory4d, a: Frac, order) -> PuiseuxSeries:
    order = Frac(order)
    coeffs = {}
    for d in range(int(order) + 1):
        c = inst_coeff_4d(th.e1, th.e2, a, d)
        if c:
            coeffs[Frac(d)] = SymExpr.from_rational(c)
    return PuiseuxSeries(coeffs, order)


@lru_cache(maxsize=None)
def _inst_coeff_5d(E1: Frac, E2: Frac, m: int, Lu: Frac, t: Frac, d: int) -> SymExpr:
    one = GaussianRational(1)
    total = SymExpr.zero()
    for lam1, lam2 in enumerate_pairs(d):
        den = (
            n_factor_5d(lam1, lam1, one, Frac(0), E1, E2, t)
            * n_factor_5d(lam1, lam2, one, Lu, E1, E2, t)
            * n_factor_5d(lam2, lam1, one, -Lu, E1, E2, t)
            * n_factor_5d(lam2, lam2, one, Frac(0), E1, E2, t)
        )
        term = SymExpr.from_rational(den.inverse())
        if m:
            term = term * cs_weight(lam1, m, one, Lu / 2, E1, E2, t)
            term = term * cs_weight(lam2, m, one, -Lu / 2, E1, E2, t)
        total = total + term
    # the degree-d weight carries (q1 q2)^{-d}
    return total * rational_power(t, -(E1 + E2) * d)


def inst_series_5d(th: Theory5d, Lu: Frac, sample: ParameterSample, order) -> PuiseuxSeries:
    order = Frac(order)
    coeffs = {}
    for d in range(int(order) + 1):
        c = _inst_coeff_5d(th.E1, th.E2, th.m, Lu, sample.t, d)
        if c:
            coeffs[Frac(d)] = c
    return PuiseuxSeries(coeffs, order)


def inst_coeff_matter(vs, sigma: Frac, sample: ParameterSample, d: int) -> SymExpr:
    """Coefficient of z^d of the four-flavour sum with bases (q^{-1}, q).

    vs: mapping with keys "0", "t", "1", "inf"; each value is a pair
    (coef: GaussianRational, p: Frac) encoding the multiplicative weight
    coef * q^p.  The first diagram of a pair is attached to the +1 label.
    """
    dq = sample.dq
    t = sample.t
    E1, E2 = Frac(-dq), Frac(dq)
    c0, p0 = vs["0"]
    ct, pt = vs["t"]
    c1, p1 = vs["1"]
    cinf, pinf = vs["inf"]

    def gpow(c: GaussianRational, k: int) -> GaussianRational:
        return c ** k if k >= 0 else c.inverse() ** (-k)

    total = SymExpr.zero()
    for lam1, lam2 in enumerate_pairs(d):
        diagrams = {1: lam1, -1: lam2}
        num = GaussianRational(1)
        den = GaussianRational(1)
        for eps in (1, -1):
            for epsp in (1, -1):
                a_coef = gpow(cinf, eps) * c1.inverse()
                a_texp = dq * (eps * pinf - p1 - epsp * sigma)
                num = num * n_factor_5d((), diagrams[epsp], a_coef, a_texp, E1, E2, t)
                b_coef = gpow(c0, -eps) * ct.inverse()
                b_texp = dq * (epsp * sigma - pt - eps * p0)
                num = num * n_factor_5d(diagrams[epsp], (), b_coef, b_texp, E1, E2, t)
                den = den * n_factor_5d(
                    diagrams[eps], diagrams[epsp],
                    GaussianRational(1), dq * (eps - epsp) * sigma, E1, E2, t,
                )
        total = total + SymExpr.from_rational(num * den.inverse())
    return total


def inst_series_matter(vs, sigma: Frac, sample: ParameterSample, order) -> PuiseuxSeries:
    order = Frac(order)
    coeffs = {}
    for d in range(int(order) + 1):
        c = inst_coeff_matter(vs, sigma, sample, d)
        if c:
            coeffs[Frac(d)] = c
    return PuiseuxSeries(coeffs, order)


# ---------------------------------------------------------------------------
# classical exponents
# ---------------------------------------------------------------------------


def classical_exp_4d(e1: Frac, e2: Frac, a: Frac) -> Frac:
    """z-exponent of the classical factor (z carries 4 scale units)."""
    return -a * a / (4 * e1 * e2)


def classical_exp_5d(E1: Frac, E2: Frac, Lu: Frac):
    """(z-exponent, t-exponent) of the 5d classical factor.

    The base of the classical power is (q1 q2)^{-1} z, hence the extra
    t-cofactor -(E1+E2) per unit of the z-exponent.
    """
    P = Frac(-Lu * Lu, 1) / (4 * E1 * E2)
    return P, -(E1 + E2) * P


# ---------------------------------------------------------------------------
# one-loop cocycles
# ---------------------------------------------------------------------------

_SQRT_2PI = rational_power(2, HALF) * pi_power(HALF)


def gamma1_exp(eps: Frac, x: Frac) -> SymExpr:
    """Closed form of the single-parameter one-loop exponential.

    For eps < 0 this is (-eps)^{-x/eps-1/2} Gamma(-x/eps) / sqrt(2 pi);
    for eps > 0 it is eps^{-x/eps-1/2} sqrt(2 pi) / Gamma(1 + x/eps).
    """
    if eps < 0:
        return rational_power(-eps, -x / eps - HALF) * gamma_value(-x / eps) / _SQRT_2PI
    return rational_power(eps, -x / eps - HALF) * _SQRT_2PI / gamma_value(1 + x / eps)


def z1loop_ratio_4d(e1: Frac, e2: Frac, a0: Frac, k1: int, k2: int) -> SymExpr:
    """Ratio of 4d one-loop factors: shifted point a0 + k1 e1 + k2 e2
    over reference a0, built by telescoping unit shifts.

    A unit shift of the first argument by +e1 multiplies the pair
    exp(-gamma(x)) exp(-gamma(-x)) by g1(e2, -x) / g1(e2, x + e1).
    """
    out = SymExpr.one()
    x = a0
    for estep, epartner, count in ((e1, e2, k1), (e2, e1, k2)):
        for _ in range(abs(count)):
            if count > 0:
                out = out * gamma1_exp(epartner, -x) / gamma1_exp(epartner, x + estep)
                x += estep
            else:
                out = out * gamma1_exp(epartner, x) / gamma1_exp(epartner, -x + estep)
                x -= estep
    return out


def z1loop_negation_ratio(e1: Frac, e2: Frac, a: Frac) -> SymExpr:
    """Ratio of one-loop factors for (-e1, -e2) over (e1, e2) at the same a.

    Negating both parameters equals shifting both arguments down by
    e1 + e2, which telescopes into four single-parameter factors.
    """
    return (
        gamma1_exp(e2, a)
        * gamma1_exp(e1, a - e1)
        * gamma1_exp(e2, -a)
        * gamma1_exp(e1, -a - e1)
    )


def q_z1loop_ratio(E1: Frac, E2: Frac, Lu0: Frac, k1: int, k2: int, t: Frac) -> SymExpr:
    """Ratio of 5d one-loop factors: u shifted by q1^{k1} q2^{k2} over u.

    One upward q1-step multiplies the double product
    (u; q1, q2)(u^{-1}; q1, q2) by S(-Lu - E1; E2) / S(Lu; E2) where
    S(E; B) is the canonical single-base Pochhammer symbol.
    """
    out = SymExpr.one()
    Lu = Lu0
    for Estep, Epartner, count in ((E1, E2, k1), (E2, E1, k2)):
        for _ in range(abs(count)):
            if count > 0:
                out = out * poch_value(-Lu - Estep, Epartner, t) / poch_value(Lu, Epartner, t)
                Lu += Estep
            else:
                out = out * poch_value(Lu - Estep, Epartner, t) / poch_value(-Lu, Epartner, t)
                Lu -= Estep
    return out


# ---------------------------------------------------------------------------
# relative assembly
# ---------------------------------------------------------------------------


class RelativeZ4d:
    """All mode data of one 4d theory relative to a reference point a0.

    mode(k1, k2, order) returns z^{gap} * cocycle * instanton-series for
    the point a0 + k1 e1 + k2 e2, exact through z^order.
    """

    def __init__(self, th: Theory4d, a0: Frac, sample: ParameterSample = None):
        self.th = th
        self.a0 = Frac(a0)
        self.sample = sample
        self._cache = {}

    def classical_gap(self, k1: int, k2: int) -> Frac:
        a = self.a0 + k1 * self.th.e1 + k2 * self.th.e2
        return classical_exp_4d(self.th.e1, self.th.e2, a) - classical_exp_4d(
            self.th.e1, self.th.e2, self.a0
        )

    def cocycle(self, k1: int, k2: int) -> SymExpr:
        return z1loop_ratio_4d(self.th.e1, self.th.e2, self.a0, k1, k2)

    def mode(self, k1: int, k2: int, order) -> PuiseuxSeries:
        order = Frac(order)
        key = (k1, k2, order)
        if key not in self._cache:
            gap = self.classical_gap(k1, k2)
            a = self.a0 + k1 * self.th.e1 + k2 * self.th.e2
            inst = inst_series_4d(self.th, a, order - gap)
            self._cache[key] = inst.shift(gap).scale(self.cocycle(k1, k2))
        return self._cache[key]


class RelativeZ5d:
    """All mode data of one 5d theory relative to a reference weight Lu0."""

    def __init__(self, th: Theory5d, Lu0: Frac, sample: ParameterSample):
        self.th = th
        self.Lu0 = Frac(Lu0)
        self.sample = sample
        self._cache = {}

    def classical_gap(self, k1: int, k2: int):
        """(z-exponent gap, t-exponent gap) of the classical factor."""
        Lu = self.Lu0 + k1 * self.th.E1 + k2 * self.th.E2
        P1, T1 = classical_exp_5d(self.th.E1, self.th.E2, Lu)
        P0, T0 = classical_exp_5d(self.th.E1, self.th.E2, self.Lu0)
        return P1 - P0, T1 - T0

    def cocycle(self, k1: int, k2: int) -> SymExpr:
        return q_z1loop_ratio(self.th.E1, self.th.E2, self.Lu0, k1, k2, self.sample.t)

    def mode(self, k1: int, k2: int, order) -> PuiseuxSeries:
        order = Frac(order)
        key = (k1, k2, order)
        if key not in self._cache:
            zgap, tgap = self.classical_gap(k1, k2)
            Lu = self.Lu0 + k1 * self.th.E1 + k2 * self.th.E2
            inst = inst_series_5d(self.th, Lu, self.sample, order - zgap)
            coeff = self.cocycle(k1, k2) * rational_power(self.sample.t, tgap)
            self._cache[key] = inst.shift(zgap).scale(coeff)
        return self._cache[key]


def assemble_relativeZ(th, ref, sample: ParameterSample = None):
    """Package a theory plus reference point into a relative-mode factory."""
    if isinstance(th, Theory4d):
        return RelativeZ4d(th, ref, sample)
    if isinstance(th, Theory5d):
        if sample is None:
            raise ValueError("5d assembly needs a parameter sample")
        return RelativeZ5d(th, ref, sample)
    raise TypeError(f"unknown theory {th!r}")


def blowup_modes(order, gap_fn, offset: Frac = Frac(0)):
    """All lattice modes n in Z + offset whose classical gap is <= order.

    gap_fn(n) must be a quadratic with positive leading coefficient;
    raises IncompleteModeRange if the scan fails to terminate.
    """
    order = Frac(order)
    out = []
    for sign in (1, -1):
        n = offset if sign == 1 else offset - 1
        steps = 0
        while gap_fn(n) <= order:
            out.append(n)
            n += sign
            steps += 1
            if steps > 64:
                raise IncompleteModeRange("mode scan did not terminate")
    return sorted(out)
