"""Points of the Siegel upper half-space and the fractional-linear action of Sp_{2g}(Z)."""

from collections.abc import Sequence
from functools import cached_property

import numpy as np

from hyperuset.errors import InvalidInputError, NumericalDegeneracyError
from hyperuset.groups.symplectic import SymplecticMatrix

SYMMETRY_TOL = 1e-12
CONDITION_LIMIT = 1e12


class SiegelPoint:
    """
    A symmetric complex g x g matrix with positive-definite imaginary part.

    The matrix is symmetrized on construction after checking it is symmetric to
    SYMMETRY_TOL (relative to its largest entry); positive definiteness of Im is
    checked by a Cholesky factorization.
    """

    def __init__(self, entries: np.ndarray | Sequence[Sequence[complex]]) -> None:
        m = np.array(entries, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
            raise InvalidInputError(f"expected a non-empty square matrix, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise InvalidInputError("matrix has non-finite entries")
        asym = float(np.max(np.abs(m - m.T)))
        if asym > SYMMETRY_TOL * max(1.0, float(np.max(np.abs(m)))):
            raise InvalidInputError(f"matrix is not symmetric (max |M - M^T| = {asym:.3e})")
        m = (m + m.T) / 2
        try:
            np.linalg.cholesky(m.imag)
        except np.linalg.LinAlgError as e:
            raise InvalidInputError("imaginary part is not positive definite") from e
        m.flags.writeable = False
        self._entries = m

    @classmethod
    def from_json(cls, rows: Sequence[Sequence[Sequence[float]]]) -> "SiegelPoint":
        """Rows of [re, im] pairs."""
        try:
            m = np.array([[complex(float(re), float(im)) for re, im in row] for row in rows])
        except (TypeError, ValueError) as e:
            raise InvalidInputError(f"Siegel point JSON must be rows of [re, im] pairs: {e}") from e
        return cls(m)

    @classmethod
    def scalar(cls, tau: complex) -> "SiegelPoint":
        """The g=1 point tau."""
        return cls([[tau]])

    @property
    def g(self) -> int:
        return self._entries.shape[0]

    @property
    def matrix(self) -> np.ndarray:
        return self._entries

    @property
    def real(self) -> np.ndarray:
        return self._entries.real

    @property
    def imag(self) -> np.ndarray:
        return self._entries.imag

    @cached_property
    def lambda_min(self) -> float:
        """Smallest eigenvalue of Im Omega."""
        return float(np.linalg.eigvalsh(self.imag)[0])

    @cached_property
    def imag_inverse(self) -> np.ndarray:
        inv = np.linalg.inv(self.imag)
        inv = (inv + inv.T) / 2
        inv.flags.writeable = False
        return inv

    def allclose(self, other: "SiegelPoint", atol: float = 1e-9) -> bool:
        return self.g == other.g and bool(np.allclose(self._entries, other._entries, rtol=0, atol=atol))

    def to_json(self) -> list[list[list[float]]]:
        return [[[float(x.real), float(x.imag)] for x in row] for row in self._entries]

    def __repr__(self) -> str:
        return f"SiegelPoint({self._entries.tolist()!r})"


def act_on_siegel(gamma: SymplecticMatrix, omega: SiegelPoint) -> SiegelPoint:
    """
    gamma . Omega = (A Omega + B)(C Omega + D)^{-1}.

    Raises:
        InvalidInputError: genus mismatch
        NumericalDegeneracyError: C Omega + D has condition number above CONDITION_LIMIT,
            or the image fails the symmetry / positive-definiteness re-check
    """
    if gamma.g != omega.g:
        raise InvalidInputError(f"genus mismatch: matrix g={gamma.g}, Siegel point g={omega.g}")
    a, b, c, d = (np.array(block, dtype=float) for block in (gamma.A, gamma.B, gamma.C, gamma.D))
    w = omega.matrix
    num = a @ w + b
    den = c @ w + d
    cond = float(np.linalg.cond(den))
    if not np.isfinite(cond) or cond > CONDITION_LIMIT:
        raise NumericalDegeneracyError(f"C Omega + D is near-singular (condition number {cond:.3e})")
    # X den = num  <=>  den^T X^T = num^T
    x = np.linalg.solve(den.T, num.T).T
    asym = float(np.max(np.abs(x - x.T)))
    if asym > SYMMETRY_TOL * cond * max(1.0, float(np.max(np.abs(x)))):
        raise NumericalDegeneracyError(f"image lost symmetry (max |X - X^T| = {asym:.3e}, cond {cond:.3e})")
    try:
        return SiegelPoint((x + x.T) / 2)
    except InvalidInputError as e:
        raise NumericalDegeneracyError(f"image left the Siegel half-space: {e}") from e
