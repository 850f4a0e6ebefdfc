"""Tau functions as Fourier-graded series over relative partition functions.

A tau function is a bilateral sum over a mode lattice: sector s^{sector(j)}
carries the relative mode series of the underlying theory at a lattice
point.  All series built here are *relative* to the j=0 normalization of
their theory; products of taus built from compatible systems share a
common normalizer, so bilinear identities can be checked directly on the
relative series.

The central 4d system fixes eps = (1, -1) for the self-dual theory and the
pair (1, -2) / (2, -1) for the two decoupled halves; the q-system fixes
q1 = q^{-1}, q2 = q and the halves (q^{-1}, q^2) / (q, q^{-2}).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .fourier import FourierSeries
from .nekrasov import (
    RelativeZ4d,
    RelativeZ5d,
    Theory4d,
    Theory5d,
    blowup_modes,
    z1loop_negation_ratio,
)
from .rationals import GaussianRational
from .sampling import ParameterSample
from .symbols import NonInvertible, SymExpr, cos_pi

Frac = Fraction
HALF = Frac(1, 2)


class NonInvertibleLeading(NonInvertible):
    """Series division needs a single-monomial leading coefficient."""


def _frac(x):
    return x if isinstance(x, Frac) else Frac(x)


def _zgap(base, k1, k2):
    g = base.classical_gap(k1, k2)
    return g[0] if isinstance(g, tuple) else g


def _unit_shift(steps, target):
    """Small integer (k1, k2) with k1*steps[0] + k2*steps[1] == target."""
    e1, e2 = steps
    for k1 in sorted(range(-8, 9), key=abs):
        rem = target - k1 * e1
        if e2 and Frac(rem, e2).denominator == 1:
            k2 = int(Frac(rem, e2))
            if abs(k2) <= 8:
                return (k1, k2)
    raise ValueError(f"shift {target} not on the lattice {steps}")


@dataclass(frozen=True)
class TauSpec:
    """Recipe for one tau function.

    Mode index j runs over Z; mode j sits in sector
    fourier_offset + j*sector_step and uses the lattice point
    k_offset + j*k_step of the underlying relative theory.  sigma_shift
    records accumulated Backlund half-shifts (bookkeeping only; the shift
    itself is encoded in k_offset / fourier_offset).
    """

    base: object
    label: str
    k_step: tuple
    k_offset: tuple = (0, 0)
    fourier_offset: Frac = Frac(0)
    sector_step: Frac = Frac(1)
    sigma_shift: Frac = Frac(0)
    prefactor: object = None

    def lattice(self, j: int):
        return (
            self.k_offset[0] + j * self.k_step[0],
            self.k_offset[1] + j * self.k_step[1],
        )

    def theory_steps(self):
        th = self.base.th
        if isinstance(th, Theory4d):
            return (th.e1, th.e2)
        return (th.E1, th.E2)


def build_tau(spec: TauSpec, E) -> FourierSeries:
    """Assemble the tau as a FourierSeries exact through z^E.

    Scans mode indices in both directions until the classical gap exceeds
    E; raises IncompleteModeRange if the scan fails to close.
    """
    E = _frac(E)

    def gap(j):
        return _zgap(spec.base, *spec.lattice(int(j)))

    sectors = {}
    for j in blowup_modes(E, gap):
        j = int(j)
        ps = spec.base.mode(*spec.lattice(j), E)
        if spec.prefactor is not None:
            ps = ps.scale(spec.prefactor)
        k = spec.fourier_offset + j * spec.sector_step
        sectors[k] = sectors[k] + ps if k in sectors else ps
    return FourierSeries(sectors, E, tag=spec.label)


def backlund(spec: TauSpec, kind: str) -> TauSpec:
    """Backlund-transformed recipe.

    kinds:
      sigma_half  sigma -> sigma + 1/2 with the s^{1/2} relabeling folded in
      u_q         u -> u q with the s^{1/4} relabeling folded in
      reverse variants carry a leading "-" (sigma -> sigma - 1/2 etc.)
    """
    sign = -1 if kind.startswith("-") else 1
    kind = kind.lstrip("-")
    steps = spec.theory_steps()
    if isinstance(spec.base, RelativeZ4d):
        # a = -2 sigma, so d(sigma) = 1/2 means d(a) = -1
        targets = {"sigma_half": Frac(-1), "u_q": None}
    else:
        dq = spec.base.sample.dq
        # Lu = 2 sigma dq, so d(sigma) = 1/2 means d(Lu) = dq; u -> uq ditto
        targets = {"sigma_half": Frac(dq), "u_q": Frac(dq)}
    if kind not in targets or targets[kind] is None:
        raise ValueError(f"unknown Backlund kind {kind!r} for this system")
    dk1, dk2 = _unit_shift(steps, sign * targets[kind])
    dsector = sign * spec.sector_step / 2
    return replace(
        spec,
        k_offset=(spec.k_offset[0] + dk1, spec.k_offset[1] + dk2),
        fourier_offset=spec.fourier_offset + dsector,
        sigma_shift=spec.sigma_shift + sign * HALF,
        label=spec.label + ("+" if sign > 0 else "-") + kind,
    )


# ---------------------------------------------------------------------------
# concrete tau systems
# ---------------------------------------------------------------------------

I_UNIT = SymExpr.from_rational(GaussianRational(0, 1))


class TauSystem4d:
    """The 4d tau functions at a common reference sigma (eps1 = 1).

    All recipes share the reference a0 = -2 sigma, so products of the two
    half-theory taus and the self-dual tau live over the same normalizer.
    """

    def __init__(self, sigma: Frac):
        self.sigma = _frac(sigma)
        a0 = -2 * self.sigma
        self.a0 = a0
        self.rc = RelativeZ4d(Theory4d(Frac(1), Frac(-1)), a0)
        self.rp = RelativeZ4d(Theory4d(Frac(1), Frac(-2)), a0)
        self.rm = RelativeZ4d(Theory4d(Frac(2), Frac(-1)), a0)

    def kiev(self) -> TauSpec:
        """Self-dual tau: sector n carries the mode at sigma + n."""
        return TauSpec(self.rc, "tau", k_step=(0, 2))

    def kiev_half(self) -> TauSpec:
        """The s^{1/2}-shifted companion (sigma + 1/2, half-integer sectors)."""
        return backlund(self.kiev(), "sigma_half")

    def short(self, sign: int) -> TauSpec:
        """Half-theory taus: sector n/2 carries the mode at sigma + n."""
        if sign > 0:
            return TauSpec(self.rp, "tau+", k_step=(0, 1), sector_step=HALF)
        return TauSpec(self.rm, "tau-", k_step=(-1, 0), sector_step=HALF)

    def long(self, i: int, kappa_sign: int = 1) -> TauSpec:
        """Parity taus: sector n in Z + i/2 carries the mode at sigma + 2n.

        Only the (1, -2) half-theory appears; the trig normalizer of the
        other half is divided out, leaving a Gaussian unit (kappa) on the
        odd lattice whose sign is the branch choice of the square root.
        """
        if i == 0:
            return TauSpec(self.rp, "tau0", k_step=(0, 2))
        return TauSpec(
            self.rp,
            "tau1",
            k_step=(0, 2),
            k_offset=(0, 1),
            fourier_offset=HALF,
            prefactor=I_UNIT * kappa_sign,
        )

    def pm_normalizer_ratio(self) -> SymExpr:
        """One-loop normalizer ratio of the (2,-1) theory over the (1,-2)
        theory at the reference point; equals 2 cos(pi sigma) when the
        reflection symmetry of the halves holds."""
        return z1loop_negation_ratio(Frac(-2), Frac(1), self.a0)

    def two_cos(self) -> SymExpr:
        return 2 * cos_pi(self.sigma)


class TauSystemQ:
    """The q-deformed tau functions at a common reference u = q^{2 sigma}.

    The sample fixes q = t^{dq}; the self-dual theory is (q^{-1}, q) with
    optional level m, and the half-theories are (q^{-1}, q^2) / (q, q^{-2}).
    """

    def __init__(self, sample: ParameterSample, m: int = 0):
        self.sample = sample
        dq = sample.dq
        Lu0 = sample.u_exp
        self.Lu0 = Lu0
        self.m = m
        self.rc = RelativeZ5d(Theory5d(Frac(-dq), Frac(dq), m), Lu0, sample)
        self.rp = RelativeZ5d(Theory5d(Frac(-dq), Frac(2 * dq), m), Lu0, sample)
        self.rm = RelativeZ5d(Theory5d(Frac(dq), Frac(-2 * dq), m), Lu0, sample)

    def kiev(self, j: int = 0) -> TauSpec:
        """Self-dual tau: sector n in Z + j/2 carries the mode at u q^{2n}."""
        if j == 0:
            return TauSpec(self.rc, "qtau", k_step=(0, 2))
        return TauSpec(
            self.rc, "qtau1", k_step=(0, 2), k_offset=(0, 1), fourier_offset=HALF
        )

    def short(self, sign: int) -> TauSpec:
        """Half-theory taus: sector n/2 carries the mode at u q^{2n}."""
        if sign > 0:
            return TauSpec(self.rp, "qtau+", k_step=(0, 1), sector_step=HALF)
        return TauSpec(self.rm, "qtau-", k_step=(0, -1), sector_step=HALF)

    def u_shifted_kiev(self, shift: int, j: int = 0) -> TauSpec:
        """Self-dual tau at u q^{shift} with unchanged sector grading."""
        spec = self.kiev(j)
        return replace(
            spec,
            k_offset=(spec.k_offset[0], spec.k_offset[1] + shift),
            label=f"{spec.label}(uq^{shift})",
        )


# ---------------------------------------------------------------------------
# derived objects
# ---------------------------------------------------------------------------


def g_function(tau0: FourierSeries, tau1: FourierSeries) -> FourierSeries:
    """z^{1/2} tau0^2 / tau1^2."""
    try:
        inv = (tau1 * tau1).inverse()
    except NonInvertible as exc:
        raise NonInvertibleLeading(str(exc)) from exc
    return ((tau0 * tau0) * inv).shift(HALF)


def zeta_from_tau(tau: FourierSeries) -> FourierSeries:
    """Logarithmic derivative theta(tau)/tau in log z.

    Series built relative to the n=0 normalization miss the reference
    classical exponent; callers add that rational offset themselves.
    """
    try:
        inv = tau.inverse()
    except NonInvertible as exc:
        raise NonInvertibleLeading(str(exc)) from exc
    return tau.theta() * inv
