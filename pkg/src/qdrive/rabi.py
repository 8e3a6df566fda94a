"""Closed-form solution of the harmonically driven two-level system under the
rotating-wave approximation (RWA).

The drive Hamiltonian is

    H(t) = [[E_g,                 conj(g) e^{+i w0 t}],
            [g e^{-i w0 t},       E_e               ]]

with a single complex coupling g (the product of field amplitude and dipole
matrix element).  Two derived constants control the dynamics:

    Theta = E_e - E_g - w0          (detuning)
    Omega = sqrt(Theta^2/4 + |g|^2) (Rabi frequency)

Starting from the ground state diag(1, 0), the density matrix stays pure and
oscillates with population period pi/Omega.  The system also admits Floquet
solutions e^{i zeta t} |phi(t)> with quasi-energy zeta = (w0 - E_e - E_g)/2.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .core import DensityMatrix, StateVector, dm_new
from .errors import BadParam, DegenerateDrive


@dataclass(frozen=True)
class RabiParams:
    """Physical parameters of the RWA drive.

    Omega is zero only in the fully degenerate case (zero coupling AND zero
    detuning); operations that divide by Omega reject it with DegenerateDrive.
    """

    e_g: float
    e_e: float
    omega0: float
    coupling: complex

    def __post_init__(self) -> None:
        for name in ("e_g", "e_e", "omega0"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise BadParam(f"{name} must be finite, got {v!r}")
        c = complex(self.coupling)
        if not (math.isfinite(c.real) and math.isfinite(c.imag)):
            raise BadParam(f"coupling must be finite, got {c!r}")
        object.__setattr__(self, "coupling", c)

    @property
    def theta(self) -> float:
        """Detuning Theta = E_e - E_g - w0."""
        return self.e_e - self.e_g - self.omega0

    @property
    def omega_rabi(self) -> float:
        """Rabi frequency Omega = sqrt(Theta^2/4 + |coupling|^2)."""
        return math.sqrt(self.theta**2 / 4.0 + abs(self.coupling) ** 2)

    @property
    def population_period(self) -> float:
        """Period pi/Omega of the level populations."""
        return math.pi / _nonzero_omega(self)


def _nonzero_omega(p: RabiParams) -> float:
    om = p.omega_rabi
    if om == 0.0:
        raise DegenerateDrive("Omega = 0 (zero coupling and zero detuning)")
    return om


def rabi_hamiltonian(p: RabiParams, t: float) -> np.ndarray:
    """RWA drive Hamiltonian [[E_g, conj(g) e^{i w0 t}], [g e^{-i w0 t}, E_e]]."""
    ph = cmath.exp(-1j * p.omega0 * t)
    return np.array(
        [[p.e_g, np.conj(p.coupling * ph)], [p.coupling * ph, p.e_e]], dtype=complex
    )


def rabi_density(p: RabiParams, t: float) -> DensityMatrix:
    """Density matrix at time t for the system started in the ground state.

    rho_gg = cos^2(Omega t) + (Theta^2 / 4 Omega^2) sin^2(Omega t)
    rho_ee = (|g|^2 / Omega^2) sin^2(Omega t)
    rho_ge = (conj(g) e^{i w0 t} / 4 Omega^2)
             (Theta cos(2 Omega t) - Theta + 2i Omega sin(2 Omega t))
    """
    om = _nonzero_omega(p)
    th = p.theta
    g = p.coupling
    s, c = math.sin(om * t), math.cos(om * t)
    rgg = c * c + (th * th / (4.0 * om * om)) * s * s
    ree = (abs(g) ** 2 / (om * om)) * s * s
    phase = cmath.exp(1j * p.omega0 * t)
    rge = (np.conj(g) * phase / (4.0 * om * om)) * (
        th * math.cos(2.0 * om * t) - th + 2j * om * math.sin(2.0 * om * t)
    )
    m = np.array([[rgg, rge], [np.conj(rge), ree]], dtype=complex)
    return dm_new(m)


def rabi_state(p: RabiParams, t: float) -> StateVector:
    """Pure state |phi(t)> whose projector reproduces rabi_density.

    c0 = cos(Omega t) + (i Theta / 2 Omega) sin(Omega t)
    c1 = -(i g / Omega) e^{-i w0 t} sin(Omega t)
    """
    om = _nonzero_omega(p)
    s = math.sin(om * t)
    c0 = math.cos(om * t) + 1j * p.theta / (2.0 * om) * s
    c1 = -1j * p.coupling / om * cmath.exp(-1j * p.omega0 * t) * s
    return StateVector(c0, c1)


def floquet_quasienergy(p: RabiParams) -> float:
    """Quasi-energy zeta = (w0 - E_e - E_g) / 2 of the periodic solution."""
    return (p.omega0 - p.e_e - p.e_g) / 2.0


def floquet_solution(p: RabiParams, t: float) -> StateVector:
    """Full solution |psi(t)> = e^{i zeta t} |phi(t)> of the Schroedinger equation."""
    phase = cmath.exp(1j * floquet_quasienergy(p) * t)
    phi = rabi_state(p, t)
    return StateVector(phase * phi.c0, phase * phi.c1)
