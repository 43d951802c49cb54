"""
Riemann theta by truncated lattice summation.

    theta(z, Omega) = sum_n exp(pi i n^T Omega n + 2 pi i n^T z)

With Y = Im Omega and c = Y^{-1} Im z every term has modulus
exp(-pi (n+c)^T Y (n+c)) * exp(s), s = pi c^T Y c. Evaluation returns the pair
(s, theta~) with theta = exp(s) * theta~; theta~ is bounded and the truncation
tolerance is an absolute bound on it.
"""

import logging
import math
from collections.abc import Iterator, Sequence
from typing import NamedTuple

import numpy as np

from hyperuset.errors import InvalidInputError, TruncationError
from hyperuset.groups.siegel import SiegelPoint
from hyperuset.theta.config import ThetaConfig

logger = logging.getLogger(__name__)

# lattice boxes above this many points are summed one leading slice at a time
BLOCK_POINTS = 1 << 20


def as_vector(z: Sequence[complex] | np.ndarray, g: int, name: str = "z") -> np.ndarray:
    v = np.asarray(z, dtype=complex).reshape(-1)
    if v.shape != (g,):
        raise InvalidInputError(f"{name} must have length {g}, got shape {np.shape(z)}")
    if not np.all(np.isfinite(v)):
        raise InvalidInputError(f"{name} has non-finite entries")
    return v


def as_int_vector(k: Sequence[int] | np.ndarray, g: int, name: str) -> np.ndarray:
    raw = np.asarray(k).reshape(-1)
    if raw.shape != (g,):
        raise InvalidInputError(f"{name} must have length {g}, got shape {np.shape(k)}")
    if any(isinstance(x, bool) or int(x) != x for x in raw.tolist()):
        raise InvalidInputError(f"{name} must be an integer vector, got {raw.tolist()}")
    return raw.astype(np.int64)


def _center(z: np.ndarray, omega: SiegelPoint) -> tuple[np.ndarray, float]:
    c = omega.imag_inverse @ z.imag
    return c, float(math.pi * c @ omega.imag @ c)


def truncation_radius(z: Sequence[complex] | np.ndarray, omega: SiegelPoint, cfg: ThetaConfig) -> int:
    """ceil(|c|_inf + sqrt((log(1/tol) + g log 3) / (pi lambda_min))) + 2."""
    v = as_vector(z, omega.g)
    c, _ = _center(v, omega)
    spread = math.sqrt((math.log(1.0 / cfg.tol) + omega.g * math.log(3.0)) / (math.pi * omega.lambda_min))
    return math.ceil(float(np.max(np.abs(c))) + spread) + 2


def _lattice_blocks(g: int, radius: int) -> Iterator[np.ndarray]:
    """Points of the box |n|_inf <= radius in lexicographic order, as (k, g) integer blocks."""
    axis = np.arange(-radius, radius + 1, dtype=np.int64)
    if axis.size**g <= BLOCK_POINTS or g == 1:
        grid = np.meshgrid(*([axis] * g), indexing="ij")
        yield np.stack([m.reshape(-1) for m in grid], axis=1)
        return
    rest = np.meshgrid(*([axis] * (g - 1)), indexing="ij")
    tail = np.stack([m.reshape(-1) for m in rest], axis=1)
    for lead in axis:
        yield np.concatenate([np.full((tail.shape[0], 1), lead, dtype=np.int64), tail], axis=1)


def theta_partial(z: Sequence[complex] | np.ndarray, omega: SiegelPoint, radius: int) -> complex:
    """theta~ summed over the box |n|_inf <= radius, in lexicographic n-order."""
    if radius < 0:
        raise InvalidInputError(f"radius must be non-negative, got {radius}")
    v = as_vector(z, omega.g)
    _, s = _center(v, omega)
    total = 0j
    for n in _lattice_blocks(omega.g, radius):
        nf = n.astype(float)
        quad = np.einsum("ki,ij,kj->k", nf, omega.matrix, nf)
        total += complex(np.sum(np.exp(1j * math.pi * quad + 2j * math.pi * (nf @ v) - s)))
    return total


class ThetaSum(NamedTuple):
    """Accepted truncated sum: theta = exp(log_scale) * bounded, summed over |n|_inf <= radius."""

    log_scale: float
    bounded: complex
    radius: int


def theta_sum(z: Sequence[complex] | np.ndarray, omega: SiegelPoint, cfg: ThetaConfig | None = None) -> ThetaSum:
    """
    Starting from `truncation_radius`, accepts R once |theta~_R - theta~_{R+2}| <= tol, growing
    R by 2 otherwise. The returned sum is the one over the larger box R + 2.

    Raises:
        TruncationError: the test still fails with R + 2 at cfg.max_radius
    """
    cfg = cfg or ThetaConfig()
    v = as_vector(z, omega.g)
    _, s = _center(v, omega)
    radius = max(0, min(truncation_radius(v, omega, cfg), cfg.max_radius - 2))
    previous = theta_partial(v, omega, radius)
    current = theta_partial(v, omega, radius + 2)
    while abs(current - previous) > cfg.tol:
        if radius + 4 > cfg.max_radius:
            raise TruncationError(radius + 2, previous, current)
        radius += 2
        previous, current = current, theta_partial(v, omega, radius + 2)
    logger.debug("theta accepted at radius %d (g=%d, s=%.3g)", radius, omega.g, s)
    return ThetaSum(s, current, radius + 2)


def theta_parts(
    z: Sequence[complex] | np.ndarray, omega: SiegelPoint, cfg: ThetaConfig | None = None
) -> tuple[float, complex]:
    """(s, theta~) with theta(z) = exp(s) * theta~."""
    result = theta_sum(z, omega, cfg)
    return result.log_scale, result.bounded


def theta(z: Sequence[complex] | np.ndarray, omega: SiegelPoint, cfg: ThetaConfig | None = None) -> complex:
    """Riemann theta function theta(z, Omega)."""
    s, bounded = theta_parts(z, omega, cfg)
    return complex(math.exp(s) * bounded)


def quasi_period_residual(
    z: Sequence[complex] | np.ndarray,
    omega: SiegelPoint,
    k1: Sequence[int] | np.ndarray,
    k2: Sequence[int] | np.ndarray,
    cfg: ThetaConfig | None = None,
) -> float:
    """
    Relative defect of theta(z + k2 + Omega k1) = exp(-pi i k1^T Omega k1 - 2 pi i k1^T z) theta(z).

    Measured as |f^{-1} theta(z + k2 + Omega k1) - theta(z)| / max(1, |theta(z)|) with f the
    automorphy factor, combined in log space: the real parts of log f^{-1} and of the scale
    difference cancel, so neither side is formed at its raw magnitude.
    """
    v = as_vector(z, omega.g)
    a = as_int_vector(k1, omega.g, "k1")
    b = as_int_vector(k2, omega.g, "k2")
    if not a.any() and not b.any():
        return 0.0
    af = a.astype(float)
    w = v + b + omega.matrix @ af
    s0, t0 = theta_parts(v, omega, cfg)
    s1, t1 = theta_parts(w, omega, cfg)
    log_factor = 1j * math.pi * (af @ omega.matrix @ af) + 2j * math.pi * (af @ v)
    moved = complex(np.exp(log_factor + (s1 - s0)) * t1)
    gap = abs(moved - t0)
    if s0 + math.log(max(abs(t0), 1e-300)) >= 0.0:
        return gap / abs(t0)
    return math.exp(s0) * gap
