import numpy as np
import pytest

from cohtrade import sample_ginibre_mixed, sample_haar_pure


@pytest.fixture(scope="session")
def haar_three_qubit():
    """Small shared ensemble of Haar pure three-qubit states."""
    return [sample_haar_pure((2, 2, 2), seed) for seed in range(200)]


@pytest.fixture(scope="session")
def ginibre_three_qubit():
    """Small shared ensemble of mixed three-qubit states of assorted ranks."""
    return [sample_ginibre_mixed((2, 2, 2), 1 + seed % 8, 10_000 + seed) for seed in range(200)]


def random_hermitian(rng: np.random.Generator, d: int) -> np.ndarray:
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return (g + g.conj().T) / 2.0
