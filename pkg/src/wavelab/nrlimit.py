"""Reduction of massive second-order wave dynamics to Schrodinger dynamics.

A positive-branch solution psi of the massive (Klein-Gordon) equation is
written psi = e^{-i m c^2 t / hbar} psi_c, where the slow envelope psi_c
carries only the kinetic part of the phase.  Dropping the envelope's second
time derivative against the rest-energy terms turns the equation for psi_c
into the free Schrodinger equation.  This module measures both halves of that
argument numerically:

* the dominance condition -- how small |d^2 psi_c/dt^2| is compared with
  |(m^2 c^4/hbar^2) psi_c + (2 i m c^2/hbar) d psi_c/dt|, evaluated exactly
  per mode and by finite differences on snapshot series;
* the resulting approximation error -- the relative L2 distance between the
  factored envelope and genuine Schrodinger evolution from the same initial
  data, which shrinks as c grows.

Sign convention: the factored phase is e^{-i m c^2 t / hbar} (particle
branch), so factoring multiplies by e^{+i m c^2 t / hbar}.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .core import (
    NATURAL_UNITS,
    GaussianPacketSpec,
    Grid1D,
    PhysicalConstants,
    TimeSpec,
    WaveField,
    l2_norm,
)
from .dispersion import KleinGordon, omega_of_k
from .exceptions import InsufficientSnapshots, NonUniformTimes
from .propagate import (
    evolve_schrodinger_spectral,
    evolve_second_order_spectral,
    gaussian_packet,
    positive_branch_init,
)


@dataclass
class FactoredField:
    """Slow envelope psi_c = e^{+i m c^2 t / hbar} psi at time t."""

    psi_c: WaveField
    t: float
    m: float


@dataclass(frozen=True)
class DominanceTerms:
    """Norms of the competing terms in the envelope's second-order equation."""

    small_term: float  # ||d^2 psi_c / dt^2||
    big_term: float    # ||(m^2 c^4/hbar^2) psi_c + (2 i m c^2/hbar) d psi_c/dt||
    ratio: float       # small / big


def factor_rest_phase(psi: WaveField, m: float,
                      consts: PhysicalConstants = NATURAL_UNITS,
                      t: float = 0.0) -> FactoredField:
    """Remove the rest-mass phase: psi_c = e^{+i m c^2 t / hbar} psi.

    The factor is unimodular, so |psi_c| equals |psi| pointwise and
    restore_rest_phase inverts exactly (one rounding per sample).
    """
    phase = np.exp(1j * m * consts.c ** 2 * t / consts.hbar)
    return FactoredField(WaveField(psi.grid, phase * psi.samples), t=t, m=m)


def restore_rest_phase(factored: FactoredField,
                       consts: PhysicalConstants = NATURAL_UNITS) -> WaveField:
    """Inverse of factor_rest_phase: psi = e^{-i m c^2 t / hbar} psi_c."""
    phase = np.exp(-1j * factored.m * consts.c ** 2 * factored.t / consts.hbar)
    return WaveField(factored.psi_c.grid, phase * factored.psi_c.samples)


def dominance_terms_mode(k: float, m: float,
                         consts: PhysicalConstants = NATURAL_UNITS) -> DominanceTerms:
    """Exact per-mode dominance terms for a positive-branch mode k.

    The envelope of the mode oscillates at Omega(k) = omega_KG(k) - m c^2/hbar,
    so d/dt acts as -i Omega and the two norms reduce to

        small = Omega^2
        big   = m^2 c^4 / hbar^2 + (2 m c^2 / hbar) Omega

    (the bracket's modulus; both contributions add for the particle branch).
    The ratio vanishes at k = 0 and falls off as c^-4 at fixed k.
    """
    if not m > 0:
        raise ValueError(f"mass must be positive, got {m}")
    hbar, c = consts.hbar, consts.c
    omega_rest = m * c * c / hbar
    big_omega = omega_of_k(KleinGordon(m), k, consts) - omega_rest
    small = big_omega ** 2
    big = omega_rest ** 2 + 2.0 * omega_rest * big_omega
    return DominanceTerms(small_term=small, big_term=big,
                          ratio=small / big if big > 0 else float("inf"))


def _uniform_dt(snapshots) -> float:
    times = np.array([s.t for s in snapshots])
    dts = np.diff(times)
    if not np.all(dts > 0):
        raise NonUniformTimes("snapshot times must be strictly increasing")
    if np.ptp(dts) > 1e-9 * dts[0]:
        raise NonUniformTimes(f"snapshot spacing varies: {dts.min()}..{dts.max()}")
    return float(dts[0])


def _field_l2(grid: Grid1D, samples: np.ndarray) -> float:
    return float(np.sqrt(np.sum(np.abs(samples) ** 2) * grid.spacing))


def _dominance_at(stack: np.ndarray, d1: np.ndarray, d2: np.ndarray,
                  grid: Grid1D, m: float, consts: PhysicalConstants) -> DominanceTerms:
    omega_rest = m * consts.c ** 2 / consts.hbar
    small = _field_l2(grid, d2)
    big = _field_l2(grid, omega_rest ** 2 * stack + 2j * omega_rest * d1)
    return DominanceTerms(small_term=small, big_term=big,
                          ratio=small / big if big > 0 else float("inf"))


def dominance_ratio_field(snapshots, consts: PhysicalConstants = NATURAL_UNITS) -> DominanceTerms:
    """Field-level dominance terms from a uniformly spaced FactoredField series.

    Time derivatives are second-order central differences over consecutive
    snapshots; the norms are L2 over the grid, averaged over the interior
    snapshot times.  Agrees with dominance_terms_mode to O(dt^2) on
    single-mode input.
    """
    snapshots = list(snapshots)
    if len(snapshots) < 3:
        raise InsufficientSnapshots(
            f"need at least 3 snapshots for central differences, got {len(snapshots)}"
        )
    dt = _uniform_dt(snapshots)
    grid = snapshots[0].psi_c.grid
    m = snapshots[0].m
    stack = np.stack([s.psi_c.samples for s in snapshots])
    smalls, bigs = [], []
    for i in range(1, len(snapshots) - 1):
        d1 = (stack[i + 1] - stack[i - 1]) / (2.0 * dt)
        d2 = (stack[i + 1] - 2.0 * stack[i] + stack[i - 1]) / (dt * dt)
        terms = _dominance_at(stack[i], d1, d2, grid, m, consts)
        smalls.append(terms.small_term)
        bigs.append(terms.big_term)
    small = float(np.mean(smalls))
    big = float(np.mean(bigs))
    return DominanceTerms(small_term=small, big_term=big,
                          ratio=small / big if big > 0 else float("inf"))


def _dominance_series(snapshots, consts: PhysicalConstants) -> list:
    """Per-snapshot dominance ratio, one value per snapshot time.

    Interior points use central differences; the end points use second-order
    one-sided stencils when at least 4 snapshots exist, otherwise they copy the
    nearest interior value.
    """
    dt = _uniform_dt(snapshots)
    grid = snapshots[0].psi_c.grid
    m = snapshots[0].m
    stack = np.stack([s.psi_c.samples for s in snapshots])
    n = len(snapshots)
    ratios = [0.0] * n
    for i in range(1, n - 1):
        d1 = (stack[i + 1] - stack[i - 1]) / (2.0 * dt)
        d2 = (stack[i + 1] - 2.0 * stack[i] + stack[i - 1]) / (dt * dt)
        ratios[i] = _dominance_at(stack[i], d1, d2, grid, m, consts).ratio
    if n >= 4:
        d1 = (-3.0 * stack[0] + 4.0 * stack[1] - stack[2]) / (2.0 * dt)
        d2 = (2.0 * stack[0] - 5.0 * stack[1] + 4.0 * stack[2] - stack[3]) / (dt * dt)
        ratios[0] = _dominance_at(stack[0], d1, d2, grid, m, consts).ratio
        d1 = (3.0 * stack[-1] - 4.0 * stack[-2] + stack[-3]) / (2.0 * dt)
        d2 = (2.0 * stack[-1] - 5.0 * stack[-2] + 4.0 * stack[-3] - stack[-4]) / (dt * dt)
        ratios[-1] = _dominance_at(stack[-1], d1, d2, grid, m, consts).ratio
    else:
        ratios[0] = ratios[1]
        ratios[-1] = ratios[-2]
    return ratios


@dataclass
class NrLimitReport:
    """Deviation and dominance-ratio time series for one (m, c) run."""

    times: list
    deviation: list       # ||psi_c(t) - psi_S(t)|| / ||psi_0||
    dominance_ratio: list
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if not (len(self.times) == len(self.deviation) == len(self.dominance_ratio)):
            raise ValueError("report series must share one length")


def nr_limit_report(psi0: WaveField, m: float,
                    consts: PhysicalConstants = NATURAL_UNITS,
                    time: TimeSpec = TimeSpec(0.01, 1),
                    snapshot_every: int = 1,
                    params: dict | None = None) -> NrLimitReport:
    """Run the full comparison pipeline from a prepared initial field.

    The field is given the positive-branch pairing and evolved under the
    massive second-order equation; the rest phase is factored out at each
    snapshot and the envelope is compared against Schrodinger evolution from
    the same initial data.  Both evolutions are exact spectral propagation, so
    every snapshot is computed directly at its time with no step accumulation.
    """
    if snapshot_every < 1:
        raise ValueError(f"snapshot_every must be >= 1, got {snapshot_every}")
    grid = psi0.grid
    eq = KleinGordon(m)
    state0 = positive_branch_init(psi0, eq, consts)
    norm0 = l2_norm(psi0)

    uniform = list(range(0, time.n_steps + 1, snapshot_every))
    steps = list(uniform)
    if steps[-1] != time.n_steps:  # off-cadence final point; kept out of stencils
        steps.append(time.n_steps)

    times, deviation, factored = [], [], []
    for step in steps:
        t = step * time.dt
        if step == 0:
            kg_psi = psi0.copy()
            schro = psi0.copy()
        else:
            kg_psi = evolve_second_order_spectral(state0, eq, consts, t).psi
            schro = evolve_schrodinger_spectral(psi0, m, consts, t)
        env = factor_rest_phase(kg_psi, m, consts, t)
        factored.append(env)
        times.append(t)
        diff = WaveField(grid, env.psi_c.samples - schro.samples)
        deviation.append(l2_norm(diff) / norm0)

    if len(uniform) >= 3:
        ratios = _dominance_series(factored[: len(uniform)], consts)
        ratios.extend([ratios[-1]] * (len(times) - len(uniform)))
    else:
        ratios = [float("nan")] * len(times)
    info = dict(params or {})
    info.update(m=m, hbar=consts.hbar, c=consts.c, dt=time.dt,
                n_steps=time.n_steps, snapshot_every=snapshot_every,
                n_points=grid.n_points, length=grid.length)
    return NrLimitReport(times=times, deviation=deviation,
                         dominance_ratio=ratios, params=info)


def kg_vs_schrodinger(spec: GaussianPacketSpec, grid: Grid1D, m: float,
                      consts: PhysicalConstants = NATURAL_UNITS,
                      time: TimeSpec = TimeSpec(0.01, 1),
                      snapshot_every: int = 1) -> NrLimitReport:
    """Gaussian-packet comparison between the massive equation and Schrodinger.

    Warns when hbar |k0| >= m c, i.e. when the carrier leaves the
    non-relativistic regime the reduction assumes.
    """
    if consts.hbar * abs(spec.k0) >= m * consts.c:
        warnings.warn(
            f"hbar|k0| = {consts.hbar * abs(spec.k0)} is not below m c = {m * consts.c}; "
            "packet is outside the non-relativistic regime",
            stacklevel=2,
        )
    psi0 = gaussian_packet(spec, grid, normalize=True)
    params = dict(x0=spec.x0, k0=spec.k0, sigma=spec.sigma)
    return nr_limit_report(psi0, m, consts, time, snapshot_every, params=params)
