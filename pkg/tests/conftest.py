"""Shared fixtures."""

import numpy as np
import pytest

from hyperuset.groups.siegel import SiegelPoint
from hyperuset.theta.config import ThetaConfig

GENERIC_G2 = [[0.8 + 1.2j, 0.3 + 0.1j], [0.3 + 0.1j, -0.4 + 1.5j]]


def _random_generic_omega(rng: np.random.Generator, g: int = 2) -> SiegelPoint:
    # Im = 1 + small symmetric perturbation; off-diagonal real parts kept away from 0
    p = rng.uniform(-0.1, 0.1, size=(g, g))
    imag = np.identity(g) + (p + p.T) / 2
    real = np.diag(rng.uniform(-0.5, 0.5, size=g))
    for i in range(g):
        for j in range(i + 1, g):
            off = rng.uniform(0.2, 0.5) * rng.choice([-1.0, 1.0])
            real[i, j] = real[j, i] = off
    return SiegelPoint(real + 1j * imag)


@pytest.fixture
def rng():
    """Seeded generator; every randomized test is reproducible."""
    return np.random.default_rng(20240611)


@pytest.fixture
def cfg():
    """Default theta settings."""
    return ThetaConfig()


@pytest.fixture
def tau_i():
    """The g=1 point tau = i."""
    return SiegelPoint.scalar(1j)


@pytest.fixture
def generic_g2():
    """Fixed generic genus-2 period matrix."""
    return SiegelPoint(GENERIC_G2)


@pytest.fixture
def diagonal_g2():
    """Omega = i * 1_2, a decomposable point."""
    return SiegelPoint(1j * np.identity(2))


@pytest.fixture
def make_omega(rng):
    """Factory for random non-decomposable period matrices drawn from `rng`."""

    def make(g: int = 2) -> SiegelPoint:
        return _random_generic_omega(rng, g)

    return make
