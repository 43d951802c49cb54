"""U-sets: the odd images of an eta map, their T-normalization, and the admissible family."""

from collections.abc import Iterable
from itertools import combinations
from typing import Any

from pydantic import BaseModel, ConfigDict, PositiveInt, model_validator

from hyperuset.core.characteristics import parity
from hyperuset.core.gb_group import (
    BranchSet,
    GBClass,
    Label,
    enumerate_gb,
    inf_bit,
    label_count,
    labels_to_mask,
    mask_to_labels,
    parse_label,
)
from hyperuset.errors import GenusLimitError, InternalError, InvalidInputError
from hyperuset.eta.maps import EtaMap, eta_of_class, require_valid

ENUMERATION_LIMIT = 12


def is_admissible_size(g: int, size: int) -> bool:
    return size % 4 == (g + 1) % 4


class USet(BaseModel):
    """A subset of {1, ..., 2g+1, inf} containing inf with cardinality g+1 mod 4, as a bit mask."""

    model_config = ConfigDict(frozen=True)

    g: PositiveInt
    mask: int

    @model_validator(mode="after")
    def _check_admissible(self) -> "USet":
        if not 0 <= self.mask < 1 << label_count(self.g):
            raise ValueError(f"mask {self.mask:#x} has bits outside the {label_count(self.g)} labels")
        if not self.mask >> inf_bit(self.g) & 1:
            raise ValueError("a U-set contains inf")
        if not is_admissible_size(self.g, self.size):
            raise ValueError(f"|U| = {self.size} is not congruent to g+1 = {self.g + 1} mod 4")
        return self

    @classmethod
    def from_labels(cls, g: int, labels: Iterable[Label]) -> "USet":
        labels = list(labels)
        mask = labels_to_mask(g, labels)
        if mask.bit_count() != len(labels):
            raise InvalidInputError(f"repeated labels in {labels!r}")
        return cls(g=g, mask=mask)

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "USet":
        return cls.from_labels(int(data["g"]), [parse_label(x) for x in data["labels"]])

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    @property
    def members(self) -> frozenset[Label]:
        return frozenset(self.labels())

    def labels(self) -> list[Label]:
        """Sorted labels, inf last."""
        return mask_to_labels(self.g, self.mask)

    def sort_key(self) -> tuple[int, list[int]]:
        return self.size, [bit for bit in range(label_count(self.g)) if self.mask >> bit & 1]

    def to_json(self) -> dict[str, Any]:
        return {"g": self.g, "labels": self.labels()}

    def __str__(self) -> str:
        return "{" + ",".join(str(label) for label in self.labels()) + "}"


def sorted_usets(usets: Iterable[USet]) -> list[USet]:
    return sorted(usets, key=USet.sort_key)


def u_set(eta: EtaMap) -> USet:
    """
    {i : eta({i, inf}) is odd} together with inf.

    Raises:
        InvalidInputError: eta is not valid
        InternalError: the result violates the mod-4 congruence
    """
    require_valid(eta)
    mask = 1 << inf_bit(eta.g)
    for i, xi in enumerate(eta.images):
        if parity(xi) == -1:
            mask |= 1 << i
    if not is_admissible_size(eta.g, mask.bit_count()):
        raise InternalError(
            f"U-set {mask_to_labels(eta.g, mask)} of a valid eta map has size {mask.bit_count()}, "
            f"not congruent to {eta.g + 1} mod 4"
        )
    return USet(g=eta.g, mask=mask)


def t_set(u: USet) -> GBClass:
    """T as an element of G_B: the class of U for odd g, of U o {inf} for even g."""
    mask = u.mask if u.g % 2 else u.mask ^ (1 << inf_bit(u.g))
    return GBClass.of(BranchSet(g=u.g, mask=mask))


def u_from_t(t: GBClass) -> USet:
    """
    Inverse of `t_set`: T (odd g) or T o {inf} (even g), then the member containing inf.

    Raises:
        InvalidInputError: the class does not come from an admissible U-set
    """
    full = (1 << label_count(t.g)) - 1
    mask = full ^ t.rep.mask if t.g % 2 else t.rep.mask | 1 << inf_bit(t.g)
    if not is_admissible_size(t.g, mask.bit_count()):
        raise InvalidInputError(f"class {t} gives |U| = {mask.bit_count()}, not congruent to {t.g + 1} mod 4")
    return USet(g=t.g, mask=mask)


def mumford_representative(u: USet) -> list[Label]:
    """The complement of U in B, i.e. the member of its pair that omits inf."""
    full = (1 << label_count(u.g)) - 1
    return mask_to_labels(u.g, full ^ u.mask)


def enumerate_admissible_u(g: int) -> set[USet]:
    """Every subset of B containing inf with cardinality g+1 mod 4."""
    if g < 1:
        raise InvalidInputError(f"genus must be positive, got {g}")
    if g > ENUMERATION_LIMIT:
        raise GenusLimitError(g, ENUMERATION_LIMIT, "enumerate_admissible_u")
    inf = 1 << inf_bit(g)
    out: set[USet] = set()
    for size in range(1, label_count(g) + 1):
        if not is_admissible_size(g, size):
            continue
        for finite in combinations(range(2 * g + 1), size - 1):
            out.add(USet(g=g, mask=inf | sum(1 << bit for bit in finite)))
    return out


def parity_cardinality_law(eta: EtaMap) -> list[GBClass]:
    """
    Classes S breaking: eta(S) is even iff #(S o U) = g+1 mod 4.

    Either representative of S gives the same residue, since the two cardinalities add up
    to 2g+2. An empty list means the law holds for eta.
    """
    u = u_set(eta)
    offending: list[GBClass] = []
    for s in enumerate_gb(eta.g):
        k = (s.rep.mask ^ u.mask).bit_count()
        if (parity(eta_of_class(eta, s)) == 1) != is_admissible_size(eta.g, k):
            offending.append(s)
    return offending

