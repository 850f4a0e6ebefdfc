"""Multi-base Pochhammer / theta series: route equivalence and the
shift, period-splitting, square-splitting, inversion, Jacobi-triple-product
and theta-shift identities, each on >= 100 randomized specs."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from nektau.fourier import ps_equal_to_order
from nektau.qseries import (
    PochhammerSpec,
    UnsupportedRegion,
    _poch_exp_coeffs,
    algebraic_fixture,
    pochhammer_series,
    theta_z_series,
)
from nektau.rationals import GaussianRational as G
from nektau.sampling import ParameterSample
from nektau.series import PuiseuxSeries
from nektau.symbols import SymExpr, rational_power

E = F(3)

ts = st.sampled_from([F(1, 2), F(1, 3), F(2, 5), F(3, 7), F(2, 3)])
zpows = st.sampled_from([F(1, 2), F(1), F(3, 2), F(2)])
coeffs = st.sampled_from(
    [F(1), F(-1), F(2), F(-1, 2), F(3, 5), G(0, 1), G(1, 1), G(0, F(-2, 3))])
base_exp = st.integers(min_value=-3, max_value=3).filter(bool)
pos_base = st.integers(min_value=1, max_value=3)


def ps_eq(a, b):
    Echk = min(a.trunc, b.trunc)
    return ps_equal_to_order(a, b, Echk).ok


def tpow(t, e):
    return rational_power(t, F(e))


@st.composite
def specs(draw, n_bases=(1, 2), positive_only=False):
    n = draw(st.integers(min_value=n_bases[0], max_value=n_bases[1]))
    strat = pos_base if positive_only else base_exp
    bases = tuple(draw(strat) for _ in range(n))
    return PochhammerSpec(draw(coeffs), draw(zpows), bases), draw(ts)


# ---------------------------------------------------------------------------
# route equivalence and spec validation
# ---------------------------------------------------------------------------


@given(specs())
@settings(max_examples=120, deadline=None)
def test_route_equivalence(spec_t):
    spec, t = spec_t
    assert ps_eq(pochhammer_series(spec, t, E, route="shift"),
                 pochhammer_series(spec, t, E, route="exp"))


def test_spec_rejects_degenerate():
    with pytest.raises(UnsupportedRegion):
        PochhammerSpec(F(1), F(0), (1,))
    with pytest.raises(UnsupportedRegion):
        PochhammerSpec(F(1), F(1), (0,))
    with pytest.raises(UnsupportedRegion):
        PochhammerSpec(F(1), F(1), (F(1, 2),))
    with pytest.raises(ValueError):
        pochhammer_series(PochhammerSpec(F(1), F(1), (1,)), F(1, 2), E,
                          route="bogus")


def test_leading_terms():
    s = pochhammer_series(PochhammerSpec(F(1), F(1), (1,)), F(1, 2), E)
    assert s.coeff(F(0)).rational_value() == G(1)
    # coefficient of z in (z; q)_inf is -1/(1-q); here q = 1/2
    assert s.coeff(F(1)).rational_value() == G(-2)


# ---------------------------------------------------------------------------
# the q-Pochhammer identities
# ---------------------------------------------------------------------------


@given(specs())
@settings(max_examples=120, deadline=None)
def test_qshift(spec_t):
    # (w; q1, rest) = (w q1; q1, rest) * (w; rest)
    spec, t = spec_t
    b1, rest = spec.bases[0], spec.bases[1:]
    lhs = pochhammer_series(spec, t, E)
    shifted = PochhammerSpec(
        SymExpr.coerce(spec.coeff) * tpow(t, b1), spec.zpow, spec.bases)
    dropped = PochhammerSpec(spec.coeff, spec.zpow, rest)
    rhs = pochhammer_series(shifted, t, E) * pochhammer_series(dropped, t, E)
    assert ps_eq(lhs, rhs)


@given(specs(), st.sampled_from([2, 3]))
@settings(max_examples=120, deadline=None)
def test_permult(spec_t, n):
    # prod_{i=0}^{n-1} (w q1^i; q1^n, rest) = (w; q1, rest)
    spec, t = spec_t
    b1, rest = spec.bases[0], spec.bases[1:]
    rhs = pochhammer_series(spec, t, E)
    lhs = PuiseuxSeries.one(E)
    for i in range(n):
        fac = PochhammerSpec(
            SymExpr.coerce(spec.coeff) * tpow(t, i * b1),
            spec.zpow, (n * b1,) + rest)
        lhs = (lhs * pochhammer_series(fac, t, E)).truncate(E)
    assert ps_eq(lhs, rhs)


@given(specs())
@settings(max_examples=120, deadline=None)
def test_sqmult(spec_t):
    # (w^2; q1^2, ..) = (w; q1, ..) * (-w; q1, ..)
    spec, t = spec_t
    c = SymExpr.coerce(spec.coeff)
    sq = PochhammerSpec(c * c, 2 * spec.zpow, tuple(2 * b for b in spec.bases))
    lhs = pochhammer_series(sq, t, E)
    rhs = pochhammer_series(spec, t, E) * pochhammer_series(
        PochhammerSpec(-c, spec.zpow, spec.bases), t, E)
    assert ps_eq(lhs, rhs)


@given(specs())
@settings(max_examples=120, deadline=None)
def test_qtrans_against_exponential_formula(spec_t):
    """Negative bases are resolved through the inversion rule; the
    exponential formula handles them directly, giving an independent route."""
    spec, t = spec_t
    via_inversion = pochhammer_series(spec, t, E)
    mmax = int(E / spec.zpow)
    g = _poch_exp_coeffs(spec.bases, t, mmax)
    c = SymExpr.coerce(spec.coeff)
    terms, cpow = {}, SymExpr.one()
    for m in range(mmax + 1):
        if g[m]:
            terms[m * spec.zpow] = cpow * g[m]
        cpow = cpow * c
    direct = PuiseuxSeries(terms, E)
    assert ps_eq(via_inversion, direct)


# ---------------------------------------------------------------------------
# theta identities
# ---------------------------------------------------------------------------

theta_args = st.fractions(min_value=F(-3, 2), max_value=2, max_denominator=4)
theta_bases = st.sampled_from([F(1, 2), F(1), F(3, 2), F(2)])
theta_coeffs = st.sampled_from([F(1), F(-1), F(2), F(-1, 3), G(0, 1)])


@given(theta_coeffs, theta_args, theta_coeffs, theta_bases, ts)
@settings(max_examples=120, deadline=None)
def test_jacobi_triple_product(cw, a, cp, r, t):
    # double-product route == bilateral Jacobi-sum route
    lhs = theta_z_series(cw, a, cp, r, E, route="product")
    rhs = theta_z_series(cw, a, cp, r, E, route="jacobi")
    assert ps_eq(lhs, rhs)


@given(theta_coeffs, theta_args, theta_coeffs, theta_bases)
@settings(max_examples=120, deadline=None)
def test_tshift(cw, a, cp, r):
    # theta(p w; p) = -w^{-1} theta(w; p)
    lhs = theta_z_series(SymExpr.coerce(cw) * SymExpr.coerce(cp), a + r,
                         cp, r, E)
    base = theta_z_series(cw, a, cp, r, E + max(F(0), -a) + abs(a))
    rhs = base.scale(-SymExpr.coerce(cw).inverse()).shift(-a).truncate(E)
    assert ps_eq(lhs, rhs)


@given(theta_coeffs, theta_args, theta_coeffs, theta_bases)
@settings(max_examples=120, deadline=None)
def test_theta_inversion(cw, a, cp, r):
    # theta(w^{-1}; p) = theta(p w; p)
    lhs = theta_z_series(SymExpr.coerce(cw).inverse(), -a, cp, r, E)
    rhs = theta_z_series(SymExpr.coerce(cw) * SymExpr.coerce(cp), a + r,
                         cp, r, E)
    assert ps_eq(lhs, rhs)


def test_theta_needs_positive_base_weight():
    with pytest.raises(UnsupportedRegion):
        theta_z_series(F(1), F(1), F(1), F(0), E)


# ---------------------------------------------------------------------------
# fixtures sanity (full bilinear checks live in the tau/acceptance tests)
# ---------------------------------------------------------------------------


def test_fixture_leading_exponents():
    assert algebraic_fixture("P3_tau_minus", F(2)).min_exp() == F(1, 16)
    assert algebraic_fixture("P3_taupm", F(2)).min_exp() == F(1, 32)
    smp = ParameterSample(t=F(1, 3), dq=8, sigma=F(3, 8))
    assert algebraic_fixture("qP3_tau", F(2), sample=smp).min_exp() == F(1, 16)
    assert algebraic_fixture(
        "qP3_taupm", F(2), sample=smp).min_exp() == F(1, 32)


def test_fixture_requires_sample():
    with pytest.raises(ValueError):
        algebraic_fixture("qP3_tau", F(2))
    with pytest.raises(ValueError):
        algebraic_fixture("nope", F(2))
