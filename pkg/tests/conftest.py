import numpy as np
import pytest

from qdrive import DensityMatrix, dm_new


def random_density_matrix(rng: np.random.Generator) -> DensityMatrix:
    """Random mixed qubit state: normalized A A^dag with Ginibre A."""
    a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    m = a @ a.conj().T
    m = m / m.trace().real
    return dm_new(m)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240817)
