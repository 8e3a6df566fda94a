"""Coherence measures for qubit density matrices.

Two measures, both taken in the fixed computational basis:

* l1 norm: sum of off-diagonal magnitudes, |rho01| + |rho10|.  Basis
  dependent; 0 for diagonal states, 1 for the maximally coherent pure state.
* Frobenius norm: normalized distance from the maximally mixed state,
  C_F = sqrt(1 + 4|rho01|^2 - 4 rho00 rho11).  Basis independent; equals 1
  for every pure qubit state and 0 for diag(1/2, 1/2).

For the square-pulse drive the l1 measure has the closed form

    C_l1(t) = (2 f0 / (1 + f0^2)) sqrt(sin^2(eps0 tau) (1 + f0^2 cos^2(eps0 tau)))

which peaks at 2 f0/(1+f0^2) when f0 <= 1 and reaches exactly 1 (twice per
half-period) when f0 >= 1, while the Frobenius measure stays constant at 1.
"""
from __future__ import annotations

import math
from typing import Callable, Sequence

import numpy as np
from scipy.optimize import minimize_scalar

from .core import DensityMatrix, TimeSeries, dm_purity
from .errors import DiscriminantNegative
from .pulse import PulseParams


def l1_coherence(rho: DensityMatrix) -> float:
    """Sum of off-diagonal magnitudes; 2|rho01| for a valid density matrix."""
    m = rho.matrix
    return float(abs(m[0, 1]) + abs(m[1, 0]))


def frobenius_coherence(rho: DensityMatrix) -> float:
    """sqrt(1 + 4|rho01|^2 - 4 rho00 rho11), radicand clamped to [0, 1].

    Clamping only absorbs rounding at machine scale; a radicand below -1e-12
    indicates an invalid state and raises DiscriminantNegative.
    """
    m = rho.matrix
    radicand = 1.0 + 4.0 * abs(m[0, 1]) ** 2 - 4.0 * m[0, 0].real * m[1, 1].real
    if radicand < -1e-12:
        raise DiscriminantNegative(f"coherence radicand {radicand:.3e} below -1e-12")
    return math.sqrt(min(max(radicand, 0.0), 1.0))


def l1_pulse_closed_form(p: PulseParams, t: float) -> float:
    """Closed-form l1 coherence of the square-pulse solution at time t."""
    tau = math.fmod(t, p.period)
    if tau < 0.0:
        tau += p.period
    f0 = p.f0
    arg = p.eps0 * tau
    s2 = math.sin(arg) ** 2
    return (
        2.0 * f0 / (1.0 + f0 * f0) * math.sqrt(s2 * (1.0 + f0 * f0 * math.cos(arg) ** 2))
    )


def build_series(t: np.ndarray, states: Sequence[DensityMatrix]) -> TimeSeries:
    """Assemble a TimeSeries from validated states, attaching purity and
    both coherence measures per sample."""
    n = len(states)
    rho = np.empty((n, 2, 2), dtype=complex)
    purity = np.empty(n)
    c_l1 = np.empty(n)
    c_frob = np.empty(n)
    for i, dm in enumerate(states):
        rho[i] = dm.matrix
        purity[i] = dm_purity(dm)
        c_l1[i] = l1_coherence(dm)
        c_frob[i] = frobenius_coherence(dm)
    return TimeSeries(t=np.asarray(t, dtype=float), rho=rho, purity=purity, c_l1=c_l1, c_frob=c_frob)


def refine_max(fn: Callable[[float], float], lo: float, hi: float, samples: int = 4096) -> float:
    """Maximum of a smooth scalar function on [lo, hi]: dense scan plus a
    bounded local polish around the best grid point.

    The scan guards against the polish settling in a secondary lobe; the
    polish removes the O(grid^2) bias of the bare scan.
    """
    ts = np.linspace(lo, hi, samples + 1)
    vals = np.array([fn(t) for t in ts])
    i = int(np.argmax(vals))
    a, b = ts[max(i - 1, 0)], ts[min(i + 1, samples)]
    if a == b:
        return float(vals[i])
    res = minimize_scalar(lambda t: -fn(t), bounds=(a, b), method="bounded",
                          options={"xatol": 1e-14})
    return float(max(vals[i], -res.fun))
