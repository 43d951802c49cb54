"""Tests for truncated Riemann theta evaluation."""

import cmath

import numpy as np
import pytest

from hyperuset.errors import InvalidInputError, TruncationError
from hyperuset.groups.siegel import SiegelPoint
from hyperuset.theta.config import ThetaConfig
from hyperuset.theta.evaluate import (
    quasi_period_residual,
    theta,
    theta_partial,
    theta_parts,
    theta_sum,
    truncation_radius,
)

THETA_0_I = 1.086434811213308


def test_theta_at_origin(tau_i):
    """Test theta(0, i) against its known value."""
    assert abs(theta([0], tau_i) - THETA_0_I) <= 1e-12


def test_odd_two_torsion_zero(tau_i):
    """Test that theta vanishes at (1+i)/2."""
    assert abs(theta([(1 + 1j) / 2], tau_i)) <= 1e-10


def test_diagonal_factorization(diagonal_g2):
    """Test theta(0, i 1_2) = theta(0, i)^2."""
    value = theta([0, 0], diagonal_g2)
    assert abs(value - THETA_0_I**2) <= 1e-10 * THETA_0_I**2


def test_product_at_nonzero_point(tau_i, diagonal_g2):
    """Test the product structure away from the origin."""
    z = np.array([0.2 + 0.1j, -0.3 + 0.05j])
    expected = theta([z[0]], tau_i) * theta([z[1]], tau_i)
    assert abs(theta(z, diagonal_g2) - expected) <= 1e-10 * max(1.0, abs(expected))


def test_quasi_period_example(tau_i):
    """Test the automorphy factor at g=1."""
    assert quasi_period_residual([0.3 + 0.2j], tau_i, [1], [0]) <= 1e-10


def test_zero_period_is_exact(generic_g2):
    """Test that k1 = k2 = 0 gives residual 0."""
    assert quasi_period_residual([0.1 + 0.1j, 0.2], generic_g2, [0, 0], [0, 0]) == 0.0


def test_integer_translation(generic_g2):
    """Test theta(z + e_1) = theta(z)."""
    assert quasi_period_residual([0.1 + 0.1j, 0.2], generic_g2, [0, 0], [1, 0]) <= 1e-10


def test_quasi_periodicity_random(rng, make_omega):
    """Test the automorphy factor on random points, matrices and periods."""
    for _ in range(100):
        g = int(rng.integers(1, 4))
        if g > 1:
            omega = make_omega(g)
        else:
            omega = SiegelPoint.scalar(complex(rng.uniform(-0.5, 0.5), rng.uniform(0.8, 1.5)))
        z = rng.uniform(-0.5, 0.5, size=g) + 1j * rng.uniform(-0.3, 0.3, size=g)
        k1 = rng.integers(-1, 2, size=g)
        k2 = rng.integers(-2, 3, size=g)
        assert quasi_period_residual(z, omega, k1, k2) <= 1e-9


def test_theta_is_even(rng, generic_g2):
    """Test theta(-z) = theta(z)."""
    for _ in range(20):
        z = rng.uniform(-0.5, 0.5, size=2) + 1j * rng.uniform(-0.3, 0.3, size=2)
        a, b = theta(z, generic_g2), theta(-z, generic_g2)
        assert abs(a - b) <= 1e-10 * max(1.0, abs(a))


@pytest.mark.parametrize(("g", "reference_radius"), [(1, 30), (2, 30), (3, 16)])
def test_truncation_against_large_box(g, reference_radius, rng, make_omega):
    """Test that the accepted partial sum agrees with a much larger box."""
    for _ in range(50):
        omega = make_omega(g)
        z = rng.uniform(-0.5, 0.5, size=g) + 1j * rng.uniform(-0.5, 0.5, size=g)
        _, bounded = theta_parts(z, omega)
        reference = theta_partial(z, omega, reference_radius)
        assert abs(bounded - reference) <= 1e-11


def test_theta_equals_scaled_parts(generic_g2):
    """Test theta = exp(s) * theta~."""
    z = np.array([0.1 + 0.4j, -0.2 + 0.3j])
    s, bounded = theta_parts(z, generic_g2)
    assert abs(theta(z, generic_g2) - cmath.exp(s) * bounded) <= 1e-12 * abs(theta(z, generic_g2))


def test_truncation_radius_grows_with_tolerance(generic_g2):
    """Test that a tighter tolerance never shrinks the radius."""
    loose = truncation_radius([0, 0], generic_g2, ThetaConfig(tol=1e-4))
    tight = truncation_radius([0, 0], generic_g2, ThetaConfig(tol=1e-14))
    assert 2 <= loose <= tight


def test_truncation_failure():
    """Test that a small radius cap raises with the last partial sums."""
    cfg = ThetaConfig(max_radius=2)
    with pytest.raises(TruncationError) as exc:
        theta([0], SiegelPoint.scalar(0.05j), cfg)
    assert exc.value.radius == 2
    assert exc.value.previous != exc.value.current


def test_bad_arguments(tau_i):
    """Test vector length and integer periods."""
    with pytest.raises(InvalidInputError):
        theta([0, 0], tau_i)
    with pytest.raises(InvalidInputError):
        quasi_period_residual([0], tau_i, [0.5], [0])
    with pytest.raises(InvalidInputError):
        quasi_period_residual([0], tau_i, [True], [0])
    with pytest.raises(InvalidInputError):
        theta_partial([0], tau_i, -1)


def test_theta_sum_reports_accepted_box(generic_g2, cfg):
    """Test that the reported radius is the box the returned sum was taken over."""
    z = np.array([0.2 - 0.1j, 0.05 + 0.3j])
    result = theta_sum(z, generic_g2, cfg)
    assert result.radius >= truncation_radius(z, generic_g2, cfg) + 2
    assert result.bounded == theta_partial(z, generic_g2, result.radius)
    assert (result.log_scale, result.bounded) == theta_parts(z, generic_g2, cfg)
