"""Sector-graded series: convolution algebra, leading term, equality reports."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from nektau.fourier import (
    EqualityReport,
    FourierSeries,
    fs_equal_to_order,
    hirota,
    ps_equal_to_order,
    weighted_hirota_expand,
)
from nektau.rationals import GaussianRational as G
from nektau.series import PuiseuxSeries
from nektau.symbols import SymExpr

TR = F(3)

exps = st.fractions(min_value=0, max_value=2, max_denominator=4)
coef = st.fractions(min_value=-9, max_value=9, max_denominator=4)
sects = st.fractions(min_value=-2, max_value=2, max_denominator=2)


@st.composite
def fseries(draw):
    n = draw(st.integers(min_value=0, max_value=3))
    out = FourierSeries.zero(TR)
    for _ in range(n):
        k = draw(sects)
        e = draw(exps)
        c = draw(coef)
        if c:
            out = out + FourierSeries.single(
                PuiseuxSeries({e: SymExpr.coerce(c)}, TR), k)
    return out


def fs_eq(a, b):
    return fs_equal_to_order(a, b, min(a.trunc, b.trunc)).ok


def test_single_and_sector():
    ps = PuiseuxSeries({F(1): SymExpr.coerce(2)}, TR)
    fs = FourierSeries.single(ps, F(1, 2))
    assert fs.sector(F(1, 2)).coeff(F(1)).rational_value() == G(2)
    assert not list(fs.sector(F(0)).items())


@given(fseries(), fseries(), fseries())
@settings(max_examples=50)
def test_ring_axioms(a, b, c):
    assert fs_eq(a + b, b + a)
    assert fs_eq(a * b, b * a)
    assert fs_eq(a * (b + c), a * b + a * c)


def test_product_adds_sector_labels():
    p = PuiseuxSeries.one(TR)
    a = FourierSeries.single(p, F(1, 2))
    b = FourierSeries.single(p, F(-3, 2))
    prod = a * b
    assert sorted(prod.sectors) == [F(-1)]


def test_relabel_reflect():
    p = PuiseuxSeries.one(TR)
    fs = FourierSeries.single(p, F(1)) + FourierSeries.single(p.scale(2), F(-2))
    r = fs.relabel(F(1, 2))
    assert sorted(r.sectors) == [F(-3, 2), F(3, 2)]
    refl = fs.reflect()
    assert sorted(refl.sectors) == [F(-1), F(2)]
    assert refl.sector(F(2)).coeff(F(0)).rational_value() == G(2)


def test_leading_and_inverse():
    p = PuiseuxSeries({F(0): SymExpr.one(), F(1): SymExpr.coerce(3)}, TR)
    fs = FourierSeries.single(p, F(0)) + FourierSeries.single(
        PuiseuxSeries({F(1, 2): SymExpr.coerce(5)}, TR), F(1))
    inv = fs.inverse()
    prod = fs * inv
    one = FourierSeries.single(PuiseuxSeries.one(prod.trunc))
    assert fs_eq(prod, one)


def test_theta_acts_per_sector():
    p = PuiseuxSeries({F(2): SymExpr.coerce(7)}, TR)
    fs = FourierSeries.single(p, F(1))
    th = fs.theta()
    assert th.sector(F(1)).coeff(F(2)).rational_value() == G(14)


# ---------------------------------------------------------------------------
# Hirota on sectors
# ---------------------------------------------------------------------------


@given(fseries())
@settings(max_examples=40)
def test_hirota_d1_self_vanishes(f):
    d = hirota(1, f, f)
    z = FourierSeries.zero(d.trunc)
    assert fs_eq(d, z)


@given(fseries(), fseries())
@settings(max_examples=40)
def test_hirota_k0_is_product(f, g):
    assert fs_eq(hirota(0, f, g), f * g)


def test_weighted_hirota_k0():
    p = PuiseuxSeries({F(1): SymExpr.coerce(2)}, TR)
    f = FourierSeries.single(p, F(1, 2))
    g = FourierSeries.single(p, F(-1, 2))
    out = weighted_hirota_expand(f, g, F(1), F(2), 1)
    assert fs_eq(out[0], f * g)


# ---------------------------------------------------------------------------
# equality reports
# ---------------------------------------------------------------------------


def test_equality_report_pass_and_fail():
    p = PuiseuxSeries({F(1): SymExpr.coerce(2)}, TR)
    a = FourierSeries.single(p, F(0))
    b = FourierSeries.single(p.scale(3), F(0))
    ok = fs_equal_to_order(a, a, F(2))
    assert ok.ok and not ok.residuals
    bad = fs_equal_to_order(a, b, F(2))
    assert not bad.ok
    sector, exponent, n_terms, rendered = bad.residuals[0]
    assert sector == F(0) and exponent == F(1) and n_terms == 1
    assert isinstance(rendered, str)
    assert "FAIL" in bad.summary()


def test_equality_raises_beyond_truncation():
    a = FourierSeries.single(PuiseuxSeries.one(F(1)))
    with pytest.raises(ValueError):
        fs_equal_to_order(a, a, F(2))
    p = PuiseuxSeries.one(F(1))
    with pytest.raises(ValueError):
        ps_equal_to_order(p, p, F(2))


def test_dump_is_sector_major_sorted():
    p0 = PuiseuxSeries({F(1): SymExpr.coerce(1), F(0): SymExpr.coerce(2)}, TR)
    fs = FourierSeries.single(p0, F(1)) + FourierSeries.single(p0, F(-1))
    rows = fs.dump()
    keys = [(tuple(r["sector"]), tuple(r["exponent"])) for r in rows]
    assert keys == sorted(keys, key=lambda x: (F(*x[0]), F(*x[1])))
