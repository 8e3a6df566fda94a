"""Two-level system driven by a constant z field plus a square-pulse x field.

    H(t) = -E0 (sigma_z + f(t) sigma_x),   f(t) = +f0 for tau < T/2,
                                                  -f0 for tau >= T/2,

with tau = t mod T.  The closed forms below hold for the self-consistent
period

    T = 2 N pi / eps0,   eps0 = E0 sqrt(1 + f0^2),   N = 1, 2, ...

chosen so the state started in |0> returns exactly to |0><0| at every
multiple of T/2.  Within a period the populations oscillate at 2*eps0 and
the off-diagonal elements flip sign when tau crosses T/2 (tracking the sign
of the pulse).  Times outside [0, T) are reduced periodically.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import SIGMA_X, SIGMA_Z, DensityMatrix, StateVector, dm_new
from .errors import BadParam


def periodicity_T(e0: float, f0: float, n: int) -> float:
    """Self-consistent drive period T = 2 n pi / (e0 sqrt(1 + f0^2)).

    f0 = 0 is admitted here (plain Larmor period); driven-scenario
    parameters additionally require f0 > 0, enforced by PulseParams.
    """
    if not (math.isfinite(e0) and e0 > 0):
        raise BadParam(f"e0 must be positive and finite, got {e0!r}")
    if not (math.isfinite(f0) and f0 >= 0):
        raise BadParam(f"f0 must be non-negative and finite, got {f0!r}")
    if int(n) != n or n < 1:
        raise BadParam(f"n must be a positive integer, got {n!r}")
    return 2.0 * n * math.pi / (e0 * math.sqrt(1.0 + f0 * f0))


@dataclass(frozen=True)
class PulseParams:
    """Square-pulse drive parameters: field energy e0, amplitude ratio f0,
    period index n_period."""

    e0: float
    f0: float
    n_period: int

    def __post_init__(self) -> None:
        if not (math.isfinite(self.f0) and self.f0 > 0):
            raise BadParam(f"f0 must be positive and finite, got {self.f0!r}")
        # periodicity_T performs the remaining domain checks
        periodicity_T(self.e0, self.f0, self.n_period)

    @property
    def eps0(self) -> float:
        """Effective oscillation energy eps0 = e0 sqrt(1 + f0^2)."""
        return self.e0 * math.sqrt(1.0 + self.f0 * self.f0)

    @property
    def period(self) -> float:
        return periodicity_T(self.e0, self.f0, self.n_period)


def _reduce(p: PulseParams, t: float) -> tuple[float, float]:
    """Map t to (tau, s): tau = t mod T and the pulse sign s on that branch."""
    T = p.period
    tau = math.fmod(t, T)
    if tau < 0.0:
        tau += T
    s = 1.0 if tau < T / 2.0 else -1.0
    return tau, s


def pulse_f(p: PulseParams, t: float) -> float:
    """Square pulse value: +f0 for tau < T/2, -f0 for tau >= T/2 (right limit
    at the switch)."""
    _, s = _reduce(p, t)
    return s * p.f0


def pulse_hamiltonian(p: PulseParams, t: float) -> np.ndarray:
    """Drive Hamiltonian -e0 (sigma_z + f(t) sigma_x) at time t."""
    return -p.e0 * (SIGMA_Z + pulse_f(p, t) * SIGMA_X)


def pulse_density(p: PulseParams, t: float) -> DensityMatrix:
    """Closed-form density matrix for the system started in |0>.

    With x = 2 eps0 tau and q = 1 + f0^2:
        rho00 = (f0^2 / 2q) cos x + (2 + f0^2) / 2q
        rho01 = s [ (f0 / 2q)(1 - cos x) - (i f0 / 2 sqrt(q)) sin x ]
    and rho11 = 1 - rho00, rho10 = conj(rho01).  The sign s follows the
    pulse branch; at the switches both branches give rho01 = 0.
    """
    tau, s = _reduce(p, t)
    f0 = p.f0
    q = 1.0 + f0 * f0
    x = 2.0 * p.eps0 * tau
    r00 = f0 * f0 / (2.0 * q) * math.cos(x) + (2.0 + f0 * f0) / (2.0 * q)
    r01 = s * (
        f0 / (2.0 * q) * (1.0 - math.cos(x))
        - 1j * f0 / (2.0 * math.sqrt(q)) * math.sin(x)
    )
    m = np.array([[r00, r01], [np.conj(r01), 1.0 - r00]], dtype=complex)
    return dm_new(m)


def pulse_state(p: PulseParams, t: float) -> StateVector:
    """Pure state whose projector reproduces pulse_density.

    c0 = cos(eps0 tau) + (i / sqrt(1 + f0^2)) sin(eps0 tau)
    c1 = s (i f0 / sqrt(1 + f0^2)) sin(eps0 tau)

    The |1> amplitude flips sign with the pulse branch.
    """
    tau, s = _reduce(p, t)
    root = math.sqrt(1.0 + p.f0 * p.f0)
    arg = p.eps0 * tau
    c0 = math.cos(arg) + 1j / root * math.sin(arg)
    c1 = s * 1j * p.f0 / root * math.sin(arg)
    return StateVector(c0, c1)


def pulse_lewis_phase(p: PulseParams, t: float) -> float:
    """Invariant-eigenstate phase for the square-pulse drive: identically 0.

    The phase rate <phi| i d/dt - H |phi> vanishes in both branches, so the
    accumulated phase is a constant, set to zero by the initial condition.
    """
    return 0.0
