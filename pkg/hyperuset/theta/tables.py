"""Theta values at the two-torsion points, their vanishing pattern, and the vanishing criterion."""

import logging
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from hyperuset.core.characteristics import Characteristic, enumerate_characteristics, parity
from hyperuset.core.gb_group import GBClass, enumerate_gb
from hyperuset.errors import GenusLimitError, InvalidInputError, NumericalDegeneracyError
from hyperuset.eta.maps import EtaMap, eta_of_class
from hyperuset.eta.usets import USet, u_set
from hyperuset.groups.siegel import SiegelPoint
from hyperuset.theta.config import ThetaConfig
from hyperuset.theta.evaluate import theta

logger = logging.getLogger(__name__)

TABLE_LIMIT = 6
CRITERION_LIMIT = 4

CSV_HEADER = ("top", "bottom", "re", "im", "abs", "vanishes")


def two_torsion_point(omega: SiegelPoint, xi: Characteristic) -> np.ndarray:
    """z = Omega xi_1 + xi_2."""
    if xi.g != omega.g:
        raise InvalidInputError(f"genus mismatch: Omega g={omega.g}, characteristic g={xi.g}")
    xi1, xi2 = xi.halves()
    return omega.matrix @ xi1 + xi2


class TwoTorsionTable(BaseModel):
    """theta(Omega xi_1 + xi_2, Omega) for every characteristic, indexed by characteristic code."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    omega: SiegelPoint
    values: tuple[complex, ...]
    scale: float
    vanish_rel: float

    @model_validator(mode="after")
    def _check_complete(self) -> "TwoTorsionTable":
        if len(self.values) != 1 << (2 * self.omega.g):
            raise ValueError(f"a table for g={self.omega.g} has {1 << (2 * self.omega.g)} values")
        if not self.scale > 0.0:
            raise ValueError("table scale must be positive")
        return self

    @property
    def g(self) -> int:
        return self.omega.g

    def value(self, xi: Characteristic) -> complex:
        if xi.g != self.g:
            raise InvalidInputError(f"genus mismatch: table g={self.g}, characteristic g={xi.g}")
        return self.values[xi.code]

    def vanishes(self, xi: Characteristic) -> bool:
        return abs(self.value(xi)) < self.vanish_rel * self.scale

    def summary(self) -> dict[str, int]:
        """Vanishing counts split by parity; `vanishing_even` counts the even thetanulls that vanish."""
        counts = {"characteristics": len(self.values), "vanishing": 0, "vanishing_even": 0, "vanishing_odd": 0}
        for xi in enumerate_characteristics(self.g):
            if self.vanishes(xi):
                counts["vanishing"] += 1
                counts["vanishing_even" if parity(xi) == 1 else "vanishing_odd"] += 1
        return counts

    def rows(self) -> list[tuple[str, str, float, float, float, bool]]:
        """One row per characteristic in code order, matching CSV_HEADER."""
        out = []
        for xi in enumerate_characteristics(self.g):
            v = self.value(xi)
            out.append(
                (
                    "".join(map(str, xi.top)),
                    "".join(map(str, xi.bottom)),
                    v.real,
                    v.imag,
                    abs(v),
                    self.vanishes(xi),
                )
            )
        return out

    def to_json(self) -> dict[str, Any]:
        return {
            "g": self.g,
            "omega": self.omega.to_json(),
            "scale": self.scale,
            "vanish_rel": self.vanish_rel,
            "values": [dict(zip(CSV_HEADER, row, strict=True)) for row in self.rows()],
            "summary": self.summary(),
        }


def two_torsion_table(omega: SiegelPoint, cfg: ThetaConfig | None = None) -> TwoTorsionTable:
    """
    Evaluate theta at all 2^{2g} two-torsion points, g <= 6.

    Raises:
        GenusLimitError: g > 6
        NumericalDegeneracyError: every value underflowed or overflowed
        TruncationError: propagated from theta
    """
    cfg = cfg or ThetaConfig()
    if omega.g > TABLE_LIMIT:
        raise GenusLimitError(omega.g, TABLE_LIMIT, "two_torsion_table")
    values = tuple(theta(two_torsion_point(omega, xi), omega, cfg) for xi in enumerate_characteristics(omega.g))
    scale = max(abs(v) for v in values)
    if not np.isfinite(scale) or scale == 0.0:
        raise NumericalDegeneracyError(f"two-torsion theta values have unusable scale {scale!r}")
    return TwoTorsionTable(omega=omega, values=values, scale=scale, vanish_rel=cfg.vanish_rel)


def vanishing_pattern(table: TwoTorsionTable) -> set[Characteristic]:
    return {xi for xi in enumerate_characteristics(table.g) if table.vanishes(xi)}


class CriterionFailure(BaseModel):
    """A class whose observed vanishing disagrees with the cardinality prediction."""

    model_config = ConfigDict(frozen=True)

    cls: GBClass
    sizes: tuple[int, int]
    magnitude: float
    vanishes: bool

    def to_json(self) -> dict[str, Any]:
        return {
            "class": self.cls.to_json(),
            "sizes": list(self.sizes),
            "magnitude": self.magnitude,
            "vanishes": self.vanishes,
        }


class CriterionReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    u: USet
    holds: bool
    vanishing: int
    failures: tuple[CriterionFailure, ...]

    def to_json(self) -> dict[str, Any]:
        return {
            "u": self.u.to_json(),
            "holds": self.holds,
            "vanishing": self.vanishing,
            "failures": [f.to_json() for f in self.failures],
        }


def check_vanishing_criterion(
    omega: SiegelPoint,
    eta: EtaMap,
    cfg: ThetaConfig | None = None,
    table: TwoTorsionTable | None = None,
) -> CriterionReport:
    """
    theta(eta(S)) vanishes iff neither representative of S o U has g+1 elements, for every class S.

    Args:
        omega: period matrix
        eta: valid eta map of the same genus; U = u_set(eta)
        cfg: evaluation settings
        table: precomputed two-torsion table of omega (recomputed when omitted)
    """
    if omega.g != eta.g:
        raise InvalidInputError(f"genus mismatch: Omega g={omega.g}, eta g={eta.g}")
    if omega.g > CRITERION_LIMIT:
        raise GenusLimitError(omega.g, CRITERION_LIMIT, "check_vanishing_criterion")
    u = u_set(eta)
    if table is None:
        table = two_torsion_table(omega, cfg)
    elif table.g != omega.g:
        raise InvalidInputError(f"genus mismatch: table g={table.g}, Omega g={omega.g}")
    failures = []
    vanishing = 0
    for s in enumerate_gb(omega.g):
        xi = eta_of_class(eta, s)
        k = (s.rep.mask ^ u.mask).bit_count()
        sizes = (k, 2 * omega.g + 2 - k)
        observed = table.vanishes(xi)
        vanishing += int(observed)
        if observed != (omega.g + 1 not in sizes):
            failures.append(CriterionFailure(cls=s, sizes=sizes, magnitude=abs(table.value(xi)), vanishes=observed))
    logger.debug("criterion for U=%s: %d vanishing, %d failures", u, vanishing, len(failures))
    return CriterionReport(u=u, holds=not failures, vanishing=vanishing, failures=tuple(failures))
