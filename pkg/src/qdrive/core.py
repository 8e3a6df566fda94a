"""Scalar/2x2-matrix arithmetic and the validated state types.

Everything downstream works with 2x2 complex matrices (numpy arrays of
shape ``(2, 2)``, dtype complex128).  This module provides the constructors
that validate physical invariants at the boundary:

* :class:`DensityMatrix` -- Hermitian, unit trace, positive semidefinite;
* :class:`StateVector`   -- normalized two-component amplitude vector;
* :class:`TimeGrid`      -- uniform grid for propagation/sampling;
* :class:`TimeSeries`    -- ordered (t, rho, purity, coherence) record.

All types are immutable values; all functions are pure.  hbar = 1 throughout.
"""
from __future__ import annotations

import math
from dataclasses import InitVar, dataclass
from typing import Iterator, NamedTuple

import numpy as np

from .errors import (
    BadParam,
    DiscriminantNegative,
    NotHermitian,
    NotNormalized,
    NotPositive,
    TraceNotOne,
)

IDENTITY = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

#: Construction tolerances for density-matrix invariants.  Fixed defaults;
#: the numerical propagator passes relaxed values (1e-8) when re-wrapping
#: integrated samples.
TOL_HERM = 1e-12
TOL_TRACE = 1e-12
TOL_PSD = 1e-12


def mat2(a00: complex, a01: complex, a10: complex, a11: complex) -> np.ndarray:
    """Build a 2x2 complex matrix, rejecting non-finite entries."""
    m = np.array([[a00, a01], [a10, a11]], dtype=complex)
    _require_finite(m, "matrix entry")
    return m


def _require_finite(m: np.ndarray, what: str) -> None:
    # np.isfinite on complex arrays requires both real and imaginary parts finite
    if not np.isfinite(m).all():
        raise BadParam(f"{what} must be finite, got {m!r}")


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix commutator ``a @ b - b @ a``."""
    return a @ b - b @ a


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """2x2 density matrix validated at construction.

    Checks, in order: finite entries, Hermiticity (rho10 = conj(rho01),
    real diagonal), unit trace, positive semidefiniteness.  The stored
    matrix is the one supplied -- never renormalized -- and is read-only.
    """

    matrix: np.ndarray
    tol_herm: InitVar[float] = TOL_HERM
    tol_trace: InitVar[float] = TOL_TRACE
    tol_psd: InitVar[float] = TOL_PSD

    def __post_init__(self, tol_herm: float, tol_trace: float, tol_psd: float) -> None:
        m = np.array(self.matrix, dtype=complex)
        if m.shape != (2, 2):
            raise BadParam(f"density matrix must be 2x2, got shape {m.shape}")
        _require_finite(m, "density-matrix entry")

        herm = max(
            abs(m[1, 0] - np.conj(m[0, 1])),
            abs(m[0, 0].imag),
            abs(m[1, 1].imag),
        )
        if herm > tol_herm:
            raise NotHermitian(f"Hermiticity violation {herm:.3e} exceeds {tol_herm:.1e}")

        tr_err = abs(m[0, 0].real + m[1, 1].real - 1.0)
        if tr_err > tol_trace:
            raise TraceNotOne(f"|trace - 1| = {tr_err:.3e} exceeds {tol_trace:.1e}")

        # Eigenvalues of the Hermitian part; the discriminant is a sum of
        # squares, so it cannot go negative.
        r00, r11 = m[0, 0].real, m[1, 1].real
        disc = math.sqrt(((r00 - r11) / 2.0) ** 2 + abs(m[0, 1]) ** 2)
        lam_min = (r00 + r11) / 2.0 - disc
        if lam_min < -tol_psd:
            raise NotPositive(f"smallest eigenvalue {lam_min:.3e} below -{tol_psd:.1e}")

        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def rho00(self) -> complex:
        return complex(self.matrix[0, 0])

    @property
    def rho01(self) -> complex:
        return complex(self.matrix[0, 1])

    @property
    def rho10(self) -> complex:
        return complex(self.matrix[1, 0])

    @property
    def rho11(self) -> complex:
        return complex(self.matrix[1, 1])


def dm_new(
    m: np.ndarray,
    *,
    tol_herm: float = TOL_HERM,
    tol_trace: float = TOL_TRACE,
    tol_psd: float = TOL_PSD,
) -> DensityMatrix:
    """Validate a 2x2 matrix as a density matrix.

    Raises NotHermitian / TraceNotOne / NotPositive naming the violated
    invariant and the offending magnitude.
    """
    return DensityMatrix(m, tol_herm=tol_herm, tol_trace=tol_trace, tol_psd=tol_psd)


def ground_state_dm() -> DensityMatrix:
    """The |0><0| (ground-state) density matrix, diag(1, 0)."""
    return DensityMatrix(np.diag([1.0, 0.0]).astype(complex))


def dm_purity(rho: DensityMatrix) -> float:
    """tr(rho^2); 1 for pure states, 0.5 for the maximally mixed qubit."""
    m = rho.matrix
    return float(m[0, 0].real ** 2 + m[1, 1].real ** 2 + 2.0 * abs(m[0, 1]) ** 2)


def dm_eigenvalues(rho: DensityMatrix) -> tuple[float, float]:
    """Eigenvalue pair (lam_plus, lam_minus) = 1/2 +- sqrt(1/4 + |rho01|^2 - rho00*rho11).

    A radicand below -1e-12 signals an invalid state and raises
    DiscriminantNegative; small negatives from rounding are clamped to 0.
    """
    m = rho.matrix
    radicand = 0.25 + abs(m[0, 1]) ** 2 - m[0, 0].real * m[1, 1].real
    if radicand < -1e-12:
        raise DiscriminantNegative(f"eigenvalue radicand {radicand:.3e} below -1e-12")
    s = math.sqrt(max(radicand, 0.0))
    return 0.5 + s, 0.5 - s


@dataclass(frozen=True)
class StateVector:
    """Normalized amplitudes (c0, c1) on the |0>/ground and |1>/excited levels."""

    c0: complex
    c1: complex

    def __post_init__(self) -> None:
        for name, c in (("c0", self.c0), ("c1", self.c1)):
            if not (math.isfinite(c.real) and math.isfinite(c.imag)):
                raise BadParam(f"{name} must be finite, got {c!r}")
        norm_err = abs(abs(self.c0) ** 2 + abs(self.c1) ** 2 - 1.0)
        if norm_err > 1e-12:
            raise NotNormalized(f"| |c0|^2 + |c1|^2 - 1 | = {norm_err:.3e} exceeds 1e-12")

    def as_array(self) -> np.ndarray:
        return np.array([self.c0, self.c1], dtype=complex)

    def projector(self) -> np.ndarray:
        """Outer product |psi><psi| as a raw 2x2 matrix."""
        v = self.as_array()
        return np.outer(v, v.conj())

    def to_density_matrix(self) -> DensityMatrix:
        return DensityMatrix(self.projector())


@dataclass(frozen=True)
class TimeGrid:
    """Uniform time grid: ``steps`` intervals covering [t_start, t_end]."""

    t_start: float
    t_end: float
    steps: int

    def __post_init__(self) -> None:
        if not (math.isfinite(self.t_start) and math.isfinite(self.t_end)):
            raise BadParam("grid endpoints must be finite")
        if not self.t_end > self.t_start:
            raise BadParam(f"t_end ({self.t_end}) must exceed t_start ({self.t_start})")
        if int(self.steps) != self.steps or self.steps < 1:
            raise BadParam(f"steps must be a positive integer, got {self.steps}")

    @property
    def h(self) -> float:
        return (self.t_end - self.t_start) / self.steps

    def times(self) -> np.ndarray:
        """steps + 1 node times, t_start + i*h, endpoint included."""
        return self.t_start + np.arange(self.steps + 1) * self.h


class Sample(NamedTuple):
    t: float
    rho: np.ndarray
    purity: float
    c_l1: float
    c_frob: float


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """Ordered record of (t, rho, purity, l1 coherence, Frobenius coherence).

    ``rho`` is stored as an (n, 2, 2) complex array; rows were validated as
    density matrices when the series was built.
    """

    t: np.ndarray
    rho: np.ndarray
    purity: np.ndarray
    c_l1: np.ndarray
    c_frob: np.ndarray

    def __post_init__(self) -> None:
        n = len(self.t)
        if self.rho.shape != (n, 2, 2):
            raise BadParam(f"rho must have shape ({n}, 2, 2), got {self.rho.shape}")
        for name in ("purity", "c_l1", "c_frob"):
            if len(getattr(self, name)) != n:
                raise BadParam(f"{name} length does not match t")
        if n > 1 and not np.all(np.diff(self.t) > 0):
            raise BadParam("sample times must be strictly increasing")

    def __len__(self) -> int:
        return len(self.t)

    def __iter__(self) -> Iterator[Sample]:
        for i in range(len(self.t)):
            yield Sample(
                float(self.t[i]),
                self.rho[i],
                float(self.purity[i]),
                float(self.c_l1[i]),
                float(self.c_frob[i]),
            )
