"""Time evolution for every equation family.

Spectral propagation is the primary method wherever coefficients are constant:
it advances each Fourier mode by its exact phase, so the only error is
rounding.  The split-step (Strang) scheme handles a position-dependent
potential, and a Crank-Nicolson finite-difference scheme exists purely as an
independent cross-check of the split-step results.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy import sparse
from scipy.sparse.linalg import splu

from .core import (
    NATURAL_UNITS,
    GaussianPacketSpec,
    Grid1D,
    PhysicalConstants,
    SpectralField,
    TimeSpec,
    WaveField,
    dft,
    idft,
    l2_norm,
)
from .dispersion import EquationKind, is_second_order, omega_of_k
from .exceptions import LinearSolveFailure, WrongEquationFamily, ZeroField


@dataclass
class SecondOrderState:
    """The (psi, d psi/dt) pair carried by second-order-in-time equations."""

    psi: WaveField
    psi_dot: WaveField

    def __post_init__(self):
        if self.psi.grid != self.psi_dot.grid:
            raise ValueError("psi and psi_dot must share one grid")

    @property
    def grid(self) -> Grid1D:
        return self.psi.grid

    def copy(self) -> "SecondOrderState":
        return SecondOrderState(self.psi.copy(), self.psi_dot.copy())


@dataclass
class EvolutionResult:
    """Final state plus snapshots; the first snapshot is the initial condition."""

    final: object  # WaveField or SecondOrderState
    snapshots: list = field(default_factory=list)  # [(t, WaveField), ...]
    norms: list = field(default_factory=list)
    centroids: list = field(default_factory=list)

    @property
    def times(self) -> list:
        return [t for t, _ in self.snapshots]


# ---------------------------------------------------------------------------
# potentials
# ---------------------------------------------------------------------------

def zero_potential(grid: Grid1D) -> np.ndarray:
    return np.zeros(grid.n_points)


def constant_potential(grid: Grid1D, v0: float) -> np.ndarray:
    return np.full(grid.n_points, float(v0))


def harmonic_potential(grid: Grid1D, m: float, omega_c: float,
                       center: float | None = None) -> np.ndarray:
    """V(x) = (1/2) m omega_c^2 (x - x_c)^2, centered at L/2 by default."""
    xc = grid.length / 2.0 if center is None else center
    x = grid.positions
    # plain multiplication so an overflowing omega_c yields inf, not OverflowError;
    # callers treat a non-finite potential as a numerical failure
    coef = 0.5 * m * omega_c * omega_c
    with np.errstate(invalid="ignore", over="ignore"):
        return coef * (x - xc) ** 2


def _check_potential(potential, grid: Grid1D) -> np.ndarray:
    v = np.asarray(potential, dtype=float)
    if v.shape != (grid.n_points,):
        raise ValueError(f"potential shape {v.shape} does not match grid")
    if not np.all(np.isfinite(v)):
        raise ValueError("potential samples must be finite")
    return v


# ---------------------------------------------------------------------------
# exact spectral propagators
# ---------------------------------------------------------------------------

def evolve_schrodinger_spectral(psi0: WaveField, m: float,
                                consts: PhysicalConstants = NATURAL_UNITS,
                                t: float = 0.0) -> WaveField:
    """Free-particle evolution psi_hat(k, t) = psi_hat(k, 0) e^{-i omega(k) t}.

    Exact for any t (no time-step error); the L2 norm is preserved to rounding.
    """
    if not m > 0:
        raise ValueError(f"mass must be positive, got {m}")
    if t == 0.0:
        return psi0.copy()
    spec = dft(psi0)
    w = consts.hbar * spec.wavenumbers ** 2 / (2.0 * m)
    return idft(SpectralField(psi0.grid, spec.mode_amplitudes * np.exp(-1j * w * t)))


def evolve_second_order_spectral(state0: SecondOrderState, eq: EquationKind,
                                 consts: PhysicalConstants = NATURAL_UNITS,
                                 t: float = 0.0) -> SecondOrderState:
    """Per-mode rotation for the second-order families.

    psi_hat(t)     =  psi_hat_0 cos(wt) + psidot_hat_0 sin(wt)/w
    psidot_hat(t)  = -w psi_hat_0 sin(wt) + psidot_hat_0 cos(wt)

    The w = 0 mode uses the sin(wt)/w -> t limit, i.e. psi_hat = psi_hat_0 +
    psidot_hat_0 * t.  Each mode conserves w^2 |psi_hat|^2 + |psidot_hat|^2.
    """
    if not is_second_order(eq):
        raise WrongEquationFamily(
            f"{type(eq).__name__} is first-order in time; use the Schrodinger propagators"
        )
    if t == 0.0:
        return state0.copy()
    grid = state0.grid
    w = omega_of_k(eq, grid.wavenumbers, consts)
    a0 = dft(state0.psi).mode_amplitudes
    b0 = dft(state0.psi_dot).mode_amplitudes
    cos_wt = np.cos(w * t)
    sin_wt = np.sin(w * t)
    sin_over_w = t * np.sinc(w * t / np.pi)  # == sin(wt)/w, finite at w = 0
    a = a0 * cos_wt + b0 * sin_over_w
    b = -w * sin_wt * a0 + b0 * cos_wt
    return SecondOrderState(
        idft(SpectralField(grid, a)),
        idft(SpectralField(grid, b)),
    )


def positive_branch_init(psi0: WaveField, eq: EquationKind,
                         consts: PhysicalConstants = NATURAL_UNITS) -> SecondOrderState:
    """Pair psi0 with psidot_hat = -i omega(k) psi_hat so every mode evolves as e^{-i omega t}."""
    if not is_second_order(eq):
        raise WrongEquationFamily(
            f"{type(eq).__name__} carries no independent psi_dot degree of freedom"
        )
    spec = dft(psi0)
    w = omega_of_k(eq, spec.wavenumbers, consts)
    psi_dot = idft(SpectralField(psi0.grid, -1j * w * spec.mode_amplitudes))
    return SecondOrderState(psi0.copy(), psi_dot)


# ---------------------------------------------------------------------------
# stepping schemes (Schrodinger with potential)
# ---------------------------------------------------------------------------

def _record(snapshots, norms, centroids, t, grid, samples):
    fld = WaveField(grid, samples.copy())
    snapshots.append((t, fld))
    norms.append(l2_norm(fld))
    centroids.append(centroid(fld) if norms[-1] > 0 else float("nan"))


def split_step_evolve(psi0: WaveField, m: float, potential,
                      consts: PhysicalConstants = NATURAL_UNITS,
                      time: TimeSpec = TimeSpec(0.01, 1),
                      snapshot_every: int = 0) -> EvolutionResult:
    """Strang splitting: half kick e^{-iV dt/2 hbar}, spectral drift, half kick.

    Both factors are unitary, so the norm is conserved to rounding per step;
    the global error against the exact solution is O(dt^2).  Snapshots are
    recorded at step 0, every `snapshot_every` steps (if > 0), and at the
    final step.
    """
    if not m > 0:
        raise ValueError(f"mass must be positive, got {m}")
    grid = psi0.grid
    v = _check_potential(potential, grid)
    dt = time.dt
    half_kick = np.exp(-0.5j * v * dt / consts.hbar)
    drift = np.exp(-1j * consts.hbar * grid.wavenumbers ** 2 * dt / (2.0 * m))

    snapshots, norms, centroids = [], [], []
    psi = psi0.samples.copy()
    _record(snapshots, norms, centroids, 0.0, grid, psi)
    for step in range(1, time.n_steps + 1):
        psi = half_kick * psi
        psi = np.fft.ifft(drift * np.fft.fft(psi))
        psi = half_kick * psi
        if (snapshot_every > 0 and step % snapshot_every == 0) or step == time.n_steps:
            _record(snapshots, norms, centroids, step * dt, grid, psi)
    return EvolutionResult(final=snapshots[-1][1].copy(), snapshots=snapshots,
                           norms=norms, centroids=centroids)


def crank_nicolson_evolve(psi0: WaveField, m: float, potential,
                          consts: PhysicalConstants = NATURAL_UNITS,
                          time: TimeSpec = TimeSpec(0.01, 1),
                          snapshot_every: int = 0) -> EvolutionResult:
    """Cayley-form implicit scheme on the central-difference Laplacian.

    (1 + i dt H / 2 hbar) psi^{n+1} = (1 - i dt H / 2 hbar) psi^n with periodic
    boundaries, i.e. a tridiagonal system with corner entries.  H is Hermitian,
    so the step is exactly unitary in exact arithmetic; accuracy is
    O(dt^2 + dx^2).  Used only as an independent cross-check of the spectral
    split-step scheme.
    """
    if not m > 0:
        raise ValueError(f"mass must be positive, got {m}")
    grid = psi0.grid
    v = _check_potential(potential, grid)
    n = grid.n_points
    dx = grid.spacing
    hbar = consts.hbar

    hop = -hbar * hbar / (2.0 * m * dx * dx)
    ham = sparse.diags(
        [np.full(n - 1, hop), -2.0 * hop + v, np.full(n - 1, hop)],
        offsets=[-1, 0, 1], format="lil", dtype=complex,
    )
    ham[0, n - 1] = hop  # periodic corners
    ham[n - 1, 0] = hop
    z = 1j * time.dt / (2.0 * hbar)
    eye = sparse.identity(n, format="csc", dtype=complex)
    a_mat = (eye + z * ham.tocsc()).tocsc()
    b_mat = (eye - z * ham.tocsc()).tocsr()
    try:
        lu = splu(a_mat)
    except RuntimeError as exc:  # singular system; cannot occur for dt > 0
        raise LinearSolveFailure(str(exc)) from exc

    snapshots, norms, centroids = [], [], []
    psi = psi0.samples.copy()
    _record(snapshots, norms, centroids, 0.0, grid, psi)
    for step in range(1, time.n_steps + 1):
        psi = lu.solve(b_mat @ psi)
        if (snapshot_every > 0 and step % snapshot_every == 0) or step == time.n_steps:
            _record(snapshots, norms, centroids, step * time.dt, grid, psi)
    return EvolutionResult(final=snapshots[-1][1].copy(), snapshots=snapshots,
                           norms=norms, centroids=centroids)


# ---------------------------------------------------------------------------
# Gaussian packets and moment diagnostics
# ---------------------------------------------------------------------------

def gaussian_packet(spec: GaussianPacketSpec, grid: Grid1D,
                    normalize: bool = True) -> WaveField:
    """Sample exp(-(x-x0)^2/4 sigma^2) e^{i k0 x}, optionally L2-normalized.

    Periodic images are ignored; the packet-width guidance on
    GaussianPacketSpec keeps them negligible.
    """
    dx = grid.spacing
    if spec.sigma < 4.0 * dx:
        warnings.warn(
            f"sigma = {spec.sigma} is below 4 dx = {4.0 * dx}; packet underresolved",
            stacklevel=2,
        )
    if spec.sigma > grid.length / 8.0:
        warnings.warn(
            f"sigma = {spec.sigma} exceeds L/8 = {grid.length / 8.0}; "
            "periodic images may overlap",
            stacklevel=2,
        )
    x = grid.positions
    psi = np.exp(-((x - spec.x0) ** 2) / (4.0 * spec.sigma ** 2) + 1j * spec.k0 * x)
    fld = WaveField(grid, psi)
    if normalize:
        fld = WaveField(grid, fld.samples / l2_norm(fld))
    return fld


def analytic_free_gaussian(spec: GaussianPacketSpec, grid: Grid1D, m: float,
                           consts: PhysicalConstants = NATURAL_UNITS,
                           t: float = 0.0, normalize: bool = True) -> WaveField:
    """Closed-form free evolution of the Gaussian packet, sampled on the grid.

    With complex width alpha(t) = sigma^2 + i hbar t / 2m and drifting center
    x0 + hbar k0 t / m:

        psi = (sigma/sqrt(alpha)) exp(-(x - x0 - v t)^2 / 4 alpha)
              exp(i(k0 x - hbar k0^2 t / 2m))

    This is the exact continuum solution and serves as the oracle for the
    spectral propagator.
    """
    if not m > 0:
        raise ValueError(f"mass must be positive, got {m}")
    hbar = consts.hbar
    x = grid.positions
    alpha = spec.sigma ** 2 + 0.5j * hbar * t / m
    beta = x - spec.x0 - hbar * spec.k0 * t / m
    psi = (spec.sigma / np.sqrt(alpha)) * np.exp(
        -beta ** 2 / (4.0 * alpha) + 1j * (spec.k0 * x - hbar * spec.k0 ** 2 * t / (2.0 * m))
    )
    if normalize:
        psi = psi / (2.0 * np.pi * spec.sigma ** 2) ** 0.25
    return WaveField(grid, psi)


def _windowed_moments(field: WaveField):
    """Weights and signed offsets (in cells) measured from the |psi|^2 maximum."""
    w = np.abs(field.samples) ** 2
    total = float(w.sum())
    if total == 0.0:
        raise ZeroField("centroid/width undefined for a zero field")
    n = field.grid.n_points
    j_peak = int(np.argmax(w))
    offsets = (np.arange(n) - j_peak + n // 2) % n - n // 2
    return w, total, j_peak, offsets


def centroid(field: WaveField) -> float:
    """First moment of |psi|^2, unwrapped around the density maximum; in [0, L)."""
    w, total, j_peak, offsets = _windowed_moments(field)
    dx = field.grid.spacing
    mean_off = float(w @ offsets) / total
    return float((j_peak + mean_off) * dx % field.grid.length)


def packet_width(field: WaveField) -> float:
    """RMS width of |psi|^2 around its centroid (periodic-aware)."""
    w, total, j_peak, offsets = _windowed_moments(field)
    dx = field.grid.spacing
    mean_off = float(w @ offsets) / total
    var = float(w @ (offsets - mean_off) ** 2) / total
    return float(np.sqrt(var) * dx)


def energy_expectation(field: WaveField, potential, m: float,
                       consts: PhysicalConstants = NATURAL_UNITS) -> float:
    """<psi|H|psi> / <psi|psi> with the kinetic term evaluated spectrally."""
    grid = field.grid
    v = _check_potential(potential, grid)
    dx = grid.spacing
    amps = np.fft.fft(field.samples, norm="ortho")
    kinetic = float(np.sum(
        consts.hbar ** 2 * grid.wavenumbers ** 2 / (2.0 * m) * np.abs(amps) ** 2
    ) * dx)
    dens = np.abs(field.samples) ** 2
    pot = float(np.sum(v * dens) * dx)
    norm_sq = float(np.sum(dens) * dx)
    if norm_sq == 0.0:
        raise ZeroField("energy expectation undefined for a zero field")
    return (kinetic + pot) / norm_sq
