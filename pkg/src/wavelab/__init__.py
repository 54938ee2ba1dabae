"""wavelab: a 1-D spectral laboratory for wave-equation dispersion relations.

Four linear wave equations (classical wave, massless electromagnetic, massive
Klein-Gordon, Schrodinger with optional potential) share one periodic grid,
one unitary transform convention, and one plane-wave bookkeeping, so their
dispersion relations, exact spectral propagators, the reduction of the massive
second-order equation to Schrodinger dynamics, and the uncertainty-bound
oscillator ground energy can all be verified quantitatively.
"""

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
    inner_product,
    l2_norm,
)
from .dispersion import (
    ClassicalWave,
    Electromagnetic,
    EquationKind,
    KinematicPair,
    KleinGordon,
    NrExpansionError,
    PlaneWaveMode,
    SchrodingerFree,
    SchrodingerPotential,
    group_velocity,
    is_second_order,
    kinematic_map,
    nr_expansion_error,
    omega_of_k,
    planewave_residual,
    planewave_sample,
)
from .nrlimit import (
    DominanceTerms,
    FactoredField,
    NrLimitReport,
    dominance_ratio_field,
    dominance_terms_mode,
    factor_rest_phase,
    kg_vs_schrodinger,
    nr_limit_report,
    restore_rest_phase,
)
from .oscillator import (
    BoundMinimum,
    GroundState,
    OscillatorProblem,
    UncertaintyPoint,
    energy_bound,
    harmonic_ground_exact,
    imaginary_time_ground_state,
    minimize_bound_analytic,
    minimize_bound_numeric,
)
from .propagate import (
    EvolutionResult,
    SecondOrderState,
    analytic_free_gaussian,
    centroid,
    constant_potential,
    crank_nicolson_evolve,
    energy_expectation,
    evolve_schrodinger_spectral,
    evolve_second_order_spectral,
    gaussian_packet,
    harmonic_potential,
    packet_width,
    positive_branch_init,
    split_step_evolve,
    zero_potential,
)

__version__ = "0.1.0"

__all__ = [
    "NATURAL_UNITS",
    "BoundMinimum",
    "ClassicalWave",
    "DominanceTerms",
    "Electromagnetic",
    "EquationKind",
    "EvolutionResult",
    "FactoredField",
    "GaussianPacketSpec",
    "Grid1D",
    "GroundState",
    "KinematicPair",
    "KleinGordon",
    "NrExpansionError",
    "NrLimitReport",
    "OscillatorProblem",
    "PhysicalConstants",
    "PlaneWaveMode",
    "SchrodingerFree",
    "SchrodingerPotential",
    "SecondOrderState",
    "SpectralField",
    "TimeSpec",
    "UncertaintyPoint",
    "WaveField",
    "analytic_free_gaussian",
    "centroid",
    "constant_potential",
    "crank_nicolson_evolve",
    "dft",
    "dominance_ratio_field",
    "dominance_terms_mode",
    "energy_bound",
    "energy_expectation",
    "evolve_schrodinger_spectral",
    "evolve_second_order_spectral",
    "factor_rest_phase",
    "gaussian_packet",
    "group_velocity",
    "harmonic_ground_exact",
    "harmonic_potential",
    "idft",
    "imaginary_time_ground_state",
    "inner_product",
    "is_second_order",
    "kg_vs_schrodinger",
    "kinematic_map",
    "l2_norm",
    "minimize_bound_analytic",
    "minimize_bound_numeric",
    "nr_expansion_error",
    "nr_limit_report",
    "omega_of_k",
    "packet_width",
    "planewave_residual",
    "planewave_sample",
    "positive_branch_init",
    "restore_rest_phase",
    "split_step_evolve",
    "zero_potential",
]
