"""Dispersion relations omega(k) for each wave-equation family.

Families and their closed forms (positive-frequency branch, omega >= 0, with
the propagation sign carried by the phase e^{i(kx - omega t)}):

* classical wave, speed v:          omega = v |k|
* electromagnetic (massless):       omega = c |k|
* Klein-Gordon, mass m:             omega = sqrt(k^2 c^2 + m^2 c^4 / hbar^2)
* free Schrodinger, mass m:         omega = hbar k^2 / 2m
* Schrodinger with constant V0:     omega = hbar k^2 / 2m + V0 / hbar

A non-constant potential has no single dispersion relation and raises
DispersionUndefined.  The module also provides the kinematic map
(p, E) = (hbar k, hbar omega), exact plane-wave sampling on a grid, and the
analytic residual of a plane wave under each family's characteristic
polynomial (zero exactly when (k, omega) satisfies the dispersion relation).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Union

import numpy as np

from .core import NATURAL_UNITS, Grid1D, PhysicalConstants, WaveField
from .exceptions import DispersionUndefined, NonCommensurateWavenumber


@dataclass(frozen=True)
class ClassicalWave:
    v: float

    def __post_init__(self):
        if not self.v > 0:
            raise ValueError(f"wave speed must be positive, got {self.v}")


@dataclass(frozen=True)
class Electromagnetic:
    """Massless family; the propagation speed is the c of PhysicalConstants."""


@dataclass(frozen=True)
class KleinGordon:
    m: float

    def __post_init__(self):
        if not self.m > 0:
            raise ValueError(f"mass must be positive, got {self.m}")


@dataclass(frozen=True)
class SchrodingerFree:
    m: float

    def __post_init__(self):
        if not self.m > 0:
            raise ValueError(f"mass must be positive, got {self.m}")


@dataclass(frozen=True, eq=False)
class SchrodingerPotential:
    m: float
    potential: np.ndarray  # V(x_j), energy units, real

    def __post_init__(self):
        if not self.m > 0:
            raise ValueError(f"mass must be positive, got {self.m}")
        v = np.asarray(self.potential, dtype=float)
        if not np.all(np.isfinite(v)):
            raise ValueError("potential samples must be finite")
        object.__setattr__(self, "potential", v)


EquationKind = Union[
    ClassicalWave, Electromagnetic, KleinGordon, SchrodingerFree, SchrodingerPotential
]

SECOND_ORDER_FAMILIES = (ClassicalWave, Electromagnetic, KleinGordon)


def is_second_order(eq: EquationKind) -> bool:
    """True for the families with a second-order time derivative."""
    return isinstance(eq, SECOND_ORDER_FAMILIES)


def _constant_potential_value(eq: SchrodingerPotential) -> float:
    v = eq.potential
    if v.size and np.ptp(v) != 0.0:
        raise DispersionUndefined(
            "no single dispersion relation exists for a non-constant potential"
        )
    return float(v[0]) if v.size else 0.0


@dataclass(frozen=True)
class PlaneWaveMode:
    """A plane wave A e^{i(kx - omega t)}; omega >= 0 by convention."""

    amplitude: complex
    k: float
    omega: float

    def __post_init__(self):
        if self.omega < 0:
            raise ValueError(f"omega must be >= 0 (positive-frequency branch), got {self.omega}")

    @property
    def wavelength(self) -> float:
        """2*pi/k (inf for the k = 0 mode)."""
        return 2.0 * np.pi / abs(self.k) if self.k != 0 else math.inf

    @property
    def frequency(self) -> float:
        """Ordinary frequency omega / 2*pi."""
        return self.omega / (2.0 * np.pi)


class KinematicPair(NamedTuple):
    p: float
    E: float


class NrExpansionError(NamedTuple):
    exact_gap: float
    next_term_bound: float


def omega_of_k(eq: EquationKind, k, consts: PhysicalConstants = NATURAL_UNITS):
    """Angular frequency of the positive branch at wavenumber k (scalar or array)."""
    karr = np.asarray(k, dtype=float)
    hbar, c = consts.hbar, consts.c
    if isinstance(eq, ClassicalWave):
        w = eq.v * np.abs(karr)
    elif isinstance(eq, Electromagnetic):
        w = c * np.abs(karr)
    elif isinstance(eq, KleinGordon):
        # hypot keeps the rest-energy / kinetic split accurate for small k*c
        w = np.hypot(karr * c, eq.m * c * c / hbar)
    elif isinstance(eq, SchrodingerFree):
        w = hbar * karr * karr / (2.0 * eq.m)
    elif isinstance(eq, SchrodingerPotential):
        v0 = _constant_potential_value(eq)
        w = hbar * karr * karr / (2.0 * eq.m) + v0 / hbar
    else:
        raise TypeError(f"unknown equation family: {eq!r}")
    return w if w.ndim else float(w)


def group_velocity(eq: EquationKind, k, consts: PhysicalConstants = NATURAL_UNITS):
    """Analytic d(omega)/dk of the closed form (0 at the k = 0 kink of |k| laws)."""
    karr = np.asarray(k, dtype=float)
    hbar, c = consts.hbar, consts.c
    if isinstance(eq, ClassicalWave):
        g = eq.v * np.sign(karr)
    elif isinstance(eq, Electromagnetic):
        g = c * np.sign(karr)
    elif isinstance(eq, KleinGordon):
        g = karr * c * c / omega_of_k(eq, karr, consts)
    elif isinstance(eq, SchrodingerFree):
        g = hbar * karr / eq.m
    elif isinstance(eq, SchrodingerPotential):
        _constant_potential_value(eq)  # raises unless constant
        g = hbar * karr / eq.m
    else:
        raise TypeError(f"unknown equation family: {eq!r}")
    return g if g.ndim else float(g)


def kinematic_map(k: float, omega: float, consts: PhysicalConstants = NATURAL_UNITS) -> KinematicPair:
    """Map (k, omega) to (p, E) = (hbar k, hbar omega)."""
    return KinematicPair(p=consts.hbar * k, E=consts.hbar * omega)


def planewave_sample(mode: PlaneWaveMode, grid: Grid1D, t: float) -> WaveField:
    """Sample A e^{i(k x_j - omega t)} on the grid.

    k must be commensurate (k = 2*pi*n/L for integer n); anything else would
    leak across modes and corrupt residual tests.
    """
    n = mode.k * grid.length / (2.0 * np.pi)
    if abs(n - round(n)) > 1e-9 * max(1.0, abs(n)):
        raise NonCommensurateWavenumber(
            f"k = {mode.k} is not a multiple of 2*pi/L (mode index {n})"
        )
    x = grid.positions
    return WaveField(grid, mode.amplitude * np.exp(1j * (mode.k * x - mode.omega * t)))


def planewave_residual(eq: EquationKind, mode: PlaneWaveMode,
                       consts: PhysicalConstants = NATURAL_UNITS) -> float:
    """|D(k, omega)| of the family's characteristic polynomial on the mode.

    All terms are moved to one side, so the residual is zero exactly when
    (k, omega) satisfies the dispersion relation.  The second-order families
    use the d'Alembertian form -k^2 + omega^2/c^2 (minus the mass term for the
    massive case); the Schrodinger families use |hbar omega - hbar^2 k^2/2m|/hbar.
    """
    k, w = mode.k, mode.omega
    hbar, c = consts.hbar, consts.c
    if isinstance(eq, ClassicalWave):
        return abs(-k * k + w * w / (eq.v * eq.v))
    if isinstance(eq, Electromagnetic):
        return abs(-k * k + w * w / (c * c))
    if isinstance(eq, KleinGordon):
        return abs(-k * k + w * w / (c * c) - eq.m * eq.m * c * c / (hbar * hbar))
    if isinstance(eq, SchrodingerFree):
        return abs(w - hbar * k * k / (2.0 * eq.m))
    if isinstance(eq, SchrodingerPotential):
        v0 = _constant_potential_value(eq)
        return abs(w - hbar * k * k / (2.0 * eq.m) - v0 / hbar)
    raise TypeError(f"unknown equation family: {eq!r}")


def nr_expansion_error(m: float, k: float,
                       consts: PhysicalConstants = NATURAL_UNITS) -> NrExpansionError:
    """Error of truncating the massive dispersion after the kinetic term.

    Returns the exact gap |omega_KG(k) - m c^2/hbar - hbar k^2/2m| together
    with the leading correction bound hbar^3 k^4 / (8 m^3 c^2) of the binomial
    expansion; the gap is below the bound throughout hbar|k| < m c.
    """
    if not m > 0:
        raise ValueError(f"mass must be positive, got {m}")
    hbar, c = consts.hbar, consts.c
    w = omega_of_k(KleinGordon(m), k, consts)
    gap = abs(w - m * c * c / hbar - hbar * k * k / (2.0 * m))
    bound = hbar ** 3 * k ** 4 / (8.0 * m ** 3 * c * c)
    return NrExpansionError(exact_gap=gap, next_term_bound=bound)
