"""Approximate arrows between towers and their finite-depth metrics."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from ..rational import ExtRational, INF
from .arrows import Arrow, ArrowError, compose, rho
from .towers import Tower


@dataclass(frozen=True)
class ApproxArrow:
    """Level maps f_n: x_n -> y_phi(n) with a declared tail-defect schedule.

    deltas[k] bounds every square defect evaluated from level k on; the
    schedule is nonincreasing.  `certs` carries optional per-stage
    certificates recorded by whoever constructed the arrow.
    """

    levels: Tuple[Arrow, ...]
    phi: Tuple[int, ...]
    deltas: Tuple[Fraction, ...]
    complete: bool = True
    certs: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if len(self.levels) != len(self.phi):
            raise ValueError("one index per level map")
        for a, b in zip(self.phi, self.phi[1:]):
            if b <= a:
                raise ValueError("phi must be strictly increasing")
        for a, b in zip(self.deltas, self.deltas[1:]):
            if b > a:
                raise ValueError("defect schedule must be nonincreasing")

    @property
    def depth(self) -> int:
        return len(self.levels)


def approx_defect(
    f: ApproxArrow, src: Tower, dst: Tower, n0: int = 0
) -> Fraction:
    """Exact max square defect rho(f_m . x_n^m, y_phi(n)^phi(m) . f_n), n0 <= n < m."""
    top = f.depth - 1
    if n0 >= top:
        raise ValueError(f"no (n, m) pair with n >= {n0} in a depth-{f.depth} prefix")
    worst = Fraction(0)
    for n in range(n0, top):
        for m in range(n + 1, top + 1):
            left = compose(f.levels[m], src.bonding(n, m))
            right = compose(dst.bonding(f.phi[n], f.phi[m]), f.levels[n])
            worst = max(worst, rho(left, right))
    return worst


def _reindexed_levels(f: ApproxArrow, dst: Tower, phi: Tuple[int, ...]):
    """Push level maps forward so both arrows target the same dst levels."""
    out = []
    for n, arrow in enumerate(f.levels):
        target = phi[n]
        if target == f.phi[n]:
            out.append(arrow)
        else:
            out.append(compose(dst.bonding(f.phi[n], target), arrow))
    return out


@dataclass(frozen=True)
class ApproxRhoEstimate:
    value: ExtRational
    lower: ExtRational
    monic: bool
    depth: int


def approx_rho(
    f: ApproxArrow, g: ApproxArrow, dst: Tower, depth: Optional[int] = None
) -> ApproxRhoEstimate:
    """Finite-depth estimate of the double-limit distance between arrows.

    Both arrows are first reindexed to a common target subsequence (the
    cofinal-subsequence preprocessing step), then either the simplified
    formula lim rho(f_n, g_n) is used (monic bondings) or the full
    two-index table is evaluated.  The bracket uses the declared defect
    schedules: the true limit can undershoot the reported value by at
    most twice the joint tail defect.
    """
    n_levels = min(f.depth, g.depth)
    if depth is not None:
        n_levels = min(n_levels, depth)
    if n_levels == 0:
        raise ArrowError("no common evaluated levels")
    phi = tuple(max(f.phi[n], g.phi[n]) for n in range(n_levels))
    fs = _reindexed_levels(f, dst, phi)[:n_levels]
    gs = _reindexed_levels(g, dst, phi)[:n_levels]
    for a, b in zip(fs, gs):
        if a.dom != b.dom or a.cod != b.cod:
            raise ArrowError("approximate arrows do not share hom-sets after reindexing")

    slack = Fraction(0)
    if f.deltas:
        slack += f.deltas[min(len(f.deltas) - 1, 0)]
    if g.deltas:
        slack += g.deltas[min(len(g.deltas) - 1, 0)]

    inst = fs[0].instance
    if inst.lflag_monic:
        value = rho(fs[-1], gs[-1])
    else:
        n = n_levels - 1
        if n == 0:
            value = rho(fs[0], gs[0])
        else:
            # deepest evaluable row of the two-index table
            top = phi[n_levels - 1]
            row_n = n_levels - 2
            left = compose(dst.bonding(phi[row_n], top), fs[row_n])
            right = compose(dst.bonding(phi[row_n], top), gs[row_n])
            value = rho(left, right)
    lower = max(Fraction(0), value - slack)
    return ApproxRhoEstimate(
        value=ExtRational(value),
        lower=ExtRational(lower),
        monic=inst.lflag_monic,
        depth=n_levels,
    )


def approx_equivalent(f: ApproxArrow, g: ApproxArrow, dst: Tower) -> bool:
    """Equivalence of approximate arrows: zero distance at the stored depth."""
    return approx_rho(f, g, dst).value == 0


@dataclass(frozen=True)
class SeqMuReport:
    value: ExtRational
    per_level: Tuple[ExtRational, ...]
    stability_ok: bool


def seq_mu(f: ApproxArrow, depth: Optional[int] = None) -> SeqMuReport:
    """Norm bound of an approximate arrow at finite depth.

    Reports the bound at the deepest evaluated level together with the
    stability audit mu(f_n) <= mu(f_m) + delta for every stored pair,
    delta being the declared defect bound at the earlier level.
    """
    n_levels = f.depth if depth is None else min(f.depth, depth)
    bounds = []
    for arrow in f.levels[:n_levels]:
        bounds.append(arrow.instance.mu_bound(arrow).bound)
    stability_ok = True
    for n in range(n_levels):
        for m in range(n + 1, n_levels):
            delta = f.deltas[min(n, len(f.deltas) - 1)] if f.deltas else Fraction(0)
            if bounds[n] > bounds[m] + ExtRational(delta):
                stability_ok = False
    return SeqMuReport(
        value=bounds[-1] if bounds else INF,
        per_level=tuple(bounds),
        stability_ok=stability_ok,
    )
