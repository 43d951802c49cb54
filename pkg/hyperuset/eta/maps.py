"""
Eta maps: the characteristics attached to the two-torsion classes {i, inf}.

An EtaMap lists eta({i, inf}) for i = 1..2g+1. A valid map sums to zero, spans F_2^{2g},
and every triple of distinct images is azygetic. Through the cocycle identity the last
two conditions together with the first say exactly that every pair of images has
symplectic pairing 1, which is what the search in `base_eta` exploits.
"""

import logging
from collections.abc import Iterable, Sequence
from functools import cache, reduce
from itertools import combinations
from operator import xor
from typing import Any

from pydantic import BaseModel, ConfigDict, PositiveInt, model_validator

from hyperuset.core.characteristics import (
    Characteristic,
    azygetic_codes,
    pairing_of_codes,
    parity,
    rank_of_codes,
)
from hyperuset.core.gb_group import GBClass, mask_to_labels
from hyperuset.errors import GenusLimitError, InternalError, InvalidInputError
from hyperuset.groups.f2 import SpF2Matrix
from hyperuset.groups.symplectic import SymplecticMatrix, reduce_mod2

logger = logging.getLogger(__name__)

BASE_ETA_LIMIT = 5


class EtaMap(BaseModel):
    """Ordered images eta({i, inf}), entry i-1 for label i. Validity is checked by `validate_eta`."""

    model_config = ConfigDict(frozen=True)

    g: PositiveInt
    images: tuple[Characteristic, ...]

    @model_validator(mode="after")
    def _check_shape(self) -> "EtaMap":
        if len(self.images) != 2 * self.g + 1:
            raise ValueError(f"an eta map for g={self.g} has {2 * self.g + 1} images, got {len(self.images)}")
        if any(xi.g != self.g for xi in self.images):
            raise ValueError(f"every image must have genus {self.g}")
        return self

    @classmethod
    def from_codes(cls, g: int, codes: Iterable[int]) -> "EtaMap":
        return cls(g=g, images=tuple(Characteristic(g=g, code=c) for c in codes))

    @classmethod
    def from_json(cls, data: Sequence[dict[str, Any]]) -> "EtaMap":
        images = tuple(Characteristic.from_json(item) for item in data)
        if not images:
            raise InvalidInputError("an eta map needs at least one image")
        return cls(g=images[0].g, images=images)

    @property
    def codes(self) -> tuple[int, ...]:
        return tuple(xi.code for xi in self.images)

    def image(self, label: int) -> Characteristic:
        """eta({label, inf})."""
        if not 1 <= label <= 2 * self.g + 1:
            raise InvalidInputError(f"label {label} out of range 1..{2 * self.g + 1}")
        return self.images[label - 1]

    def to_json(self) -> list[dict[str, list[int]]]:
        return [xi.to_json() for xi in self.images]


class EtaReport(BaseModel):
    """The three validity conditions of an eta map, evaluated independently."""

    model_config = ConfigDict(frozen=True)

    zero_sum: bool
    spans: bool
    azygetic: bool

    @property
    def valid(self) -> bool:
        return self.zero_sum and self.spans and self.azygetic

    def to_json(self) -> dict[str, bool]:
        return {**self.model_dump(), "valid": self.valid}


def _check_codes(g: int, codes: Sequence[int]) -> EtaReport:
    zero_sum = reduce(xor, codes, 0) == 0
    spans = rank_of_codes(codes) == 2 * g
    azygetic = all(
        len({x, y, z}) == 3 and azygetic_codes(g, x, y, z) for x, y, z in combinations(codes, 3)
    )
    return EtaReport(zero_sum=zero_sum, spans=spans, azygetic=azygetic)


def validate_eta(eta: EtaMap) -> EtaReport:
    """
    Diagnostic check of zero-sum, spanning and azygetic triples.

    Repeated images fail the azygetic condition (a triple with a repeat is never azygetic).
    """
    return _check_codes(eta.g, eta.codes)


def require_valid(eta: EtaMap) -> None:
    report = validate_eta(eta)
    if not report.valid:
        raise InvalidInputError(f"eta map is not valid: {report.to_json()}")


@cache
def _base_eta_codes(g: int) -> tuple[int, ...]:
    n = 1 << (2 * g)
    # compat[x]: bitmask of the codes y with pairing(x, y) = 1
    compat = [sum(1 << y for y in range(n) if pairing_of_codes(g, x, y)) for x in range(n)]
    chosen: list[int] = []
    visited = 0

    def extend(candidates: int, acc: int) -> bool:
        nonlocal visited
        visited += 1
        if len(chosen) == 2 * g:
            if acc > chosen[-1] and candidates >> acc & 1:
                chosen.append(acc)
                return True
            return False
        floor = chosen[-1] + 1 if chosen else 1
        remaining = candidates >> floor << floor
        while remaining:
            low = remaining & -remaining
            x = low.bit_length() - 1
            remaining ^= low
            chosen.append(x)
            if extend(candidates & compat[x], acc ^ x):
                return True
            chosen.pop()
        return False

    if not extend((1 << n) - 1, 0):
        raise InternalError(f"no eta map found for g={g}")
    logger.debug("base_eta(%d) found after %d search nodes: %s", g, visited, chosen)
    return tuple(chosen)


def base_eta(g: int) -> EtaMap:
    """
    The lexicographically smallest valid eta map, by code order of the images.

    Any reordering of a valid map is valid, so the smallest one is increasing; the search
    runs over increasing sequences whose members pairwise pair to 1, and the last image is
    forced to be the sum of the others.

    Raises:
        GenusLimitError: g > 5
        InternalError: search failure or a result that does not validate
    """
    if g < 1:
        raise InvalidInputError(f"genus must be positive, got {g}")
    if g > BASE_ETA_LIMIT:
        raise GenusLimitError(g, BASE_ETA_LIMIT, "base_eta")
    eta = EtaMap.from_codes(g, _base_eta_codes(g))
    report = validate_eta(eta)
    if not report.valid:
        raise InternalError(f"base_eta({g}) failed validation: {report.to_json()}")
    return eta


def eta_of_class(eta: EtaMap, s: GBClass) -> Characteristic:
    """Sum of eta({i, inf}) over the finite labels of the canonical representative of s."""
    if eta.g != s.g:
        raise InvalidInputError(f"genus mismatch: eta g={eta.g}, class g={s.g}")
    code = 0
    for label in mask_to_labels(s.g, s.rep.mask):
        code ^= eta.images[int(label) - 1].code
    return Characteristic(g=eta.g, code=code)


def transform_eta(gamma: SymplecticMatrix | SpF2Matrix, eta: EtaMap) -> EtaMap:
    """
    Apply the coordinate action gamma^{-T} to every image.

    Raises:
        InvalidInputError: genus mismatch or an invalid input map
        InternalError: the image map fails validation
    """
    f2 = reduce_mod2(gamma) if isinstance(gamma, SymplecticMatrix) else gamma
    if f2.g != eta.g:
        raise InvalidInputError(f"genus mismatch: matrix g={f2.g}, eta g={eta.g}")
    require_valid(eta)
    out = EtaMap(g=eta.g, images=tuple(f2.inverse_transpose().apply_many(eta.images)))
    report = validate_eta(out)
    if not report.valid:
        raise InternalError(f"transformed eta map failed validation: {report.to_json()}")
    return out


def preserves_eta_parity(gamma: SymplecticMatrix | SpF2Matrix, eta: EtaMap) -> bool:
    """True iff gamma leaves the parity of every eta({i, inf}) unchanged."""
    moved = transform_eta(gamma, eta)
    return all(parity(a) == parity(b) for a, b in zip(eta.images, moved.images, strict=True))
