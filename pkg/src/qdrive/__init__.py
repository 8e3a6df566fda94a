"""qdrive: density-matrix dynamics of periodically driven two-level systems.

Closed-form solutions (RWA harmonic drive, square-pulse drive), a
Lewis-type dynamical invariant that reproduces the density matrix, Floquet
quasi-energies, l1/Frobenius coherence measures, and a fixed-step RK4
Liouville propagator that cross-checks every closed form.
"""
from .coherence import (
    build_series,
    frobenius_coherence,
    l1_coherence,
    l1_pulse_closed_form,
    refine_max,
)
from .core import (
    IDENTITY,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    DensityMatrix,
    Sample,
    StateVector,
    TimeGrid,
    TimeSeries,
    commutator,
    dm_eigenvalues,
    dm_new,
    dm_purity,
    ground_state_dm,
    mat2,
)
from .errors import (
    BadParam,
    ConfigInvalid,
    DegenerateDrive,
    DiscriminantNegative,
    InvariantDrift,
    NotHermitian,
    NotNormalized,
    NotPositive,
    OutOfRange,
    QdriveError,
    StepSpansDiscontinuity,
    TraceNotOne,
    ZeroCoupling,
)
from .lewis import (
    InvariantCoefficients,
    invariance_residual,
    invariant_coefficients,
    invariant_operator,
    lewis_phase,
    xi_squared,
)
from .liouville import (
    DriveHamiltonian,
    RwaRabi,
    Sampled,
    SquarePulse,
    hamiltonian_at,
    liouville_rhs,
    propagate,
)
from .pulse import (
    PulseParams,
    periodicity_T,
    pulse_density,
    pulse_f,
    pulse_hamiltonian,
    pulse_lewis_phase,
    pulse_state,
)
from .rabi import (
    RabiParams,
    floquet_quasienergy,
    floquet_solution,
    rabi_density,
    rabi_hamiltonian,
    rabi_state,
)

__version__ = "0.1.0"

__all__ = [
    "BadParam",
    "ConfigInvalid",
    "DegenerateDrive",
    "DensityMatrix",
    "DiscriminantNegative",
    "DriveHamiltonian",
    "IDENTITY",
    "InvariantCoefficients",
    "InvariantDrift",
    "NotHermitian",
    "NotNormalized",
    "NotPositive",
    "OutOfRange",
    "PulseParams",
    "QdriveError",
    "RabiParams",
    "RwaRabi",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "Sample",
    "Sampled",
    "SquarePulse",
    "StateVector",
    "StepSpansDiscontinuity",
    "TimeGrid",
    "TimeSeries",
    "TraceNotOne",
    "ZeroCoupling",
    "build_series",
    "commutator",
    "dm_eigenvalues",
    "dm_new",
    "dm_purity",
    "floquet_quasienergy",
    "floquet_solution",
    "frobenius_coherence",
    "ground_state_dm",
    "hamiltonian_at",
    "invariance_residual",
    "invariant_coefficients",
    "invariant_operator",
    "l1_coherence",
    "l1_pulse_closed_form",
    "lewis_phase",
    "liouville_rhs",
    "mat2",
    "periodicity_T",
    "propagate",
    "pulse_density",
    "pulse_f",
    "pulse_hamiltonian",
    "pulse_lewis_phase",
    "pulse_state",
    "rabi_density",
    "rabi_hamiltonian",
    "rabi_state",
    "refine_max",
    "xi_squared",
]
