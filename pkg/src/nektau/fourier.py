"""Fourier-graded series: finite maps sector k in (1/2)Z -> PuiseuxSeries.

The sector index is the formal s-power of a tau function; products convolve
sectors.  Equality testing produces a structural report (which sector, which
exponent, what residual) rather than a bare boolean.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .series import PuiseuxSeries, hirota_ps, weighted_theta_expand_ps
from .symbols import NonInvertible, SymExpr

Frac = Fraction


def _frac(x):
    return x if isinstance(x, Frac) else Frac(x)


class FourierSeries:
    __slots__ = ("sectors", "trunc", "tag")

    def __init__(self, sectors, trunc, tag=""):
        trunc = _frac(trunc)
        clean = {}
        for k, ps in sectors.items():
            ps = ps.truncate(trunc) if ps.trunc > trunc else ps
            if not ps.is_zero():
                clean[_frac(k)] = ps
        object.__setattr__(self, "sectors", clean)
        object.__setattr__(self, "trunc", trunc)
        object.__setattr__(self, "tag", tag)

    def __setattr__(self, name, value):
        raise AttributeError("FourierSeries is immutable")

    @staticmethod
    def zero(trunc):
        return FourierSeries({}, trunc)

    @staticmethod
    def single(ps: PuiseuxSeries, k=0, tag=""):
        return FourierSeries({_frac(k): ps}, ps.trunc, tag)

    def sector(self, k) -> PuiseuxSeries:
        return self.sectors.get(_frac(k), PuiseuxSeries.zero(self.trunc))

    def with_tag(self, tag):
        return FourierSeries(self.sectors, self.trunc, tag)

    def relabel(self, dk):
        """Multiply by s^{dk}: shift every sector index."""
        dk = _frac(dk)
        return FourierSeries({k + dk: ps for k, ps in self.sectors.items()}, self.trunc, self.tag)

    def reflect(self):
        """s -> s^{-1}: sector index negation."""
        return FourierSeries({-k: ps for k, ps in self.sectors.items()}, self.trunc, self.tag)

    def __add__(self, other):
        trunc = min(self.trunc, other.trunc)
        out = dict(self.sectors)
        for k, ps in other.sectors.items():
            out[k] = out[k] + ps if k in out else ps
        return FourierSeries(out, trunc)

    def __neg__(self):
        return FourierSeries({k: -ps for k, ps in self.sectors.items()}, self.trunc, self.tag)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return FourierSeries({k: ps.scale(c) for k, ps in self.sectors.items()}, self.trunc, self.tag)

    def shift(self, de):
        """Multiply by z^{de}."""
        return FourierSeries({k: ps.shift(de) for k, ps in self.sectors.items()}, self.trunc + _frac(de), self.tag)

    def __mul__(self, other):
        if isinstance(other, (int, Frac, SymExpr)):
            return self.scale(other)
        # conservative bound: min over cross valuations
        v_self = min((ps.min_exp() for ps in self.sectors.values()), default=self.trunc)
        v_other = min((ps.min_exp() for ps in other.sectors.values()), default=other.trunc)
        trunc = min(self.trunc + v_other, other.trunc + v_self)
        out = {}
        for k1, p1 in self.sectors.items():
            for k2, p2 in other.sectors.items():
                prod = p1 * p2
                k = k1 + k2
                out[k] = out[k] + prod if k in out else prod
        return FourierSeries(out, trunc)

    __rmul__ = __mul__

    def theta(self):
        return FourierSeries({k: ps.theta() for k, ps in self.sectors.items()}, self.trunc, self.tag)

    def dilate(self, q_exp, sample):
        return FourierSeries(
            {k: ps.dilate(q_exp, sample) for k, ps in self.sectors.items()}, self.trunc, self.tag
        )

    def truncate(self, E):
        return FourierSeries(self.sectors, min(self.trunc, _frac(E)), self.tag)

    def leading(self):
        """(sector, exponent, coefficient) of the unique minimal term.

        Minimality is in the z-exponent; ties across sectors are rejected
        since the inverse would then not have a single leading monomial.
        """
        best = None
        for k, ps in self.sectors.items():
            e = ps.min_exp()
            if best is None or e < best[1]:
                best = (k, e)
            elif e == best[1]:
                raise NonInvertible("no unique minimal term across sectors")
        if best is None:
            raise ZeroDivisionError("inverse of zero series")
        k, e = best
        return k, e, self.sectors[k].coeff(e)

    def inverse(self):
        """1/series when a unique minimal monomial (sector, exponent) exists."""
        k0, e0, c0 = self.leading()
        c0_inv = c0.inverse()
        # series = c0 s^{k0} z^{e0} (1 + R) with R of positive valuation
        rel_trunc = self.trunc - e0
        r_sectors = {}
        for k, ps in self.sectors.items():
            shifted = PuiseuxSeries(
                {e - e0: c * c0_inv for e, c in ps.coeffs.items()
                 if not (k == k0 and e == e0)},
                rel_trunc,
            )
            if not shifted.is_zero():
                r_sectors[k - k0] = shifted
        r = FourierSeries(r_sectors, rel_trunc)
        out = FourierSeries.single(PuiseuxSeries.one(rel_trunc))
        if r.sectors:
            v = min(ps.min_exp() for ps in r.sectors.values())
            if v <= 0:
                raise NonInvertible("non-leading term at the leading exponent")
            term = out
            for _ in range(int(rel_trunc / v) + 1):
                term = term * (-r)
                term = term.truncate(rel_trunc)
                if not term.sectors:
                    break
                out = out + term
        return FourierSeries(
            {k - k0: ps.scale(c0_inv).shift(-e0) for k, ps in out.sectors.items()},
            rel_trunc - e0,
        )

    def __repr__(self):
        return f"<FS[{self.tag}] sectors={sorted(self.sectors)} trunc={self.trunc}>"

    def dump(self):
        out = []
        for k in sorted(self.sectors):
            for e, c in self.sectors[k].items():
                out.append(
                    {
                        "sector": [k.numerator, k.denominator],
                        "exponent": [e.numerator, e.denominator],
                        "coefficient": c.render(),
                    }
                )
        return out


def hirota(k: int, f, g):
    """D^k in log z; sector-bilinear on FourierSeries, plain on PuiseuxSeries."""
    if isinstance(f, PuiseuxSeries):
        return hirota_ps(k, f, g)
    v_f = min((ps.min_exp() for ps in f.sectors.values()), default=f.trunc)
    v_g = min((ps.min_exp() for ps in g.sectors.values()), default=g.trunc)
    trunc = min(f.trunc + v_g, g.trunc + v_f)
    out = {}
    for k1, p1 in f.sectors.items():
        for k2, p2 in g.sectors.items():
            prod = hirota_ps(k, p1, p2)
            kk = k1 + k2
            out[kk] = out[kk] + prod if kk in out else prod
    return FourierSeries(out, trunc)


def weighted_hirota_expand(f, g, w1, w2, max_alpha: int):
    """alpha-expansion coefficients of f(e^{w1 a} z) g(e^{w2 a} z).

    Returns [H_0..H_max] with H_k the coefficient of alpha^k/k!, i.e.
    H_k = sum_j C(k,j) w1^j w2^{k-j} theta^j f * theta^{k-j} g.
    """
    if max_alpha > 4:
        raise ValueError("alpha order limited to 4")
    if isinstance(f, PuiseuxSeries):
        return [weighted_theta_expand_ps(f, g, w1, w2, k) for k in range(max_alpha + 1)]
    out = []
    for k in range(max_alpha + 1):
        v_f = min((ps.min_exp() for ps in f.sectors.values()), default=f.trunc)
        v_g = min((ps.min_exp() for ps in g.sectors.values()), default=g.trunc)
        trunc = min(f.trunc + v_g, g.trunc + v_f)
        acc = {}
        for k1, p1 in f.sectors.items():
            for k2, p2 in g.sectors.items():
                prod = weighted_theta_expand_ps(p1, p2, w1, w2, k)
                kk = k1 + k2
                acc[kk] = acc[kk] + prod if kk in acc else prod
        out.append(FourierSeries(acc, trunc))
    return out


@dataclass
class EqualityReport:
    ok: bool
    checked_order: Frac
    residuals: list = field(default_factory=list)  # (sector, exponent, n_terms, render)
    note: str = ""

    def summary(self):
        if self.ok:
            return f"pass (exact through z^{self.checked_order})"
        head = self.residuals[:4]
        bits = ", ".join(
            f"sector {s} exponent {e}: {n} residual term(s)" for s, e, n, _ in head
        )
        more = "" if len(self.residuals) <= 4 else f" (+{len(self.residuals)-4} more)"
        return f"FAIL through z^{self.checked_order}: {bits}{more}"


def fs_equal_to_order(a: FourierSeries, b: FourierSeries, E) -> EqualityReport:
    """Structural residual test: a - b must vanish for exponents <= E."""
    E = _frac(E)
    if a.trunc < E or b.trunc < E:
        raise ValueError(
            f"series only known to {min(a.trunc, b.trunc)}, asked to compare to {E}"
        )
    diff = a - b
    residuals = []
    for k in sorted(diff.sectors):
        for e, c in diff.sectors[k].items():
            if e <= E and c:
                residuals.append((k, e, len(c.terms), c.render()))
    return EqualityReport(not residuals, E, residuals)


def ps_equal_to_order(a: PuiseuxSeries, b: PuiseuxSeries, E) -> EqualityReport:
    return fs_equal_to_order(FourierSeries.single(a), FourierSeries.single(b), E)
