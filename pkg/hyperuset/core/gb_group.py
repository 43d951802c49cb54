"""G_B - even subsets of the branch labels modulo complement, under symmetric difference."""

from collections.abc import Iterable
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, PositiveInt, model_validator

from hyperuset.errors import GenusLimitError, InvalidInputError

INF: Literal["inf"] = "inf"

Label = int | Literal["inf"]

ENUMERATION_LIMIT = 12


def label_count(g: int) -> int:
    """Number of branch labels, 2g+2."""
    return 2 * g + 2


def inf_bit(g: int) -> int:
    """Bit index of the label infinity (little-endian, last position)."""
    return 2 * g + 1


def label_to_bit(g: int, label: Label) -> int:
    """Bit index of a label; raises on labels outside {1, ..., 2g+1, inf}."""
    if label == INF:
        return inf_bit(g)
    if isinstance(label, bool) or not isinstance(label, int):
        raise InvalidInputError(f"label must be an integer or 'inf', got {label!r}")
    if not 1 <= label <= 2 * g + 1:
        raise InvalidInputError(f"label {label} out of range 1..{2 * g + 1} for g={g}")
    return label - 1


def bit_to_label(g: int, bit: int) -> Label:
    return INF if bit == inf_bit(g) else bit + 1


def labels_to_mask(g: int, labels: Iterable[Label]) -> int:
    mask = 0
    for label in labels:
        mask |= 1 << label_to_bit(g, label)
    return mask


def mask_to_labels(g: int, mask: int) -> list[Label]:
    """Sorted labels of a mask, with 'inf' last."""
    return [bit_to_label(g, bit) for bit in range(label_count(g)) if mask >> bit & 1]


def parse_label(raw: Any) -> Label:
    """Accept an int, 'inf' or a decimal string (CLI / JSON input)."""
    if raw == INF:
        return INF
    if isinstance(raw, str) and raw.strip().lstrip("-").isdigit():
        return int(raw)
    return raw


class BranchSet(BaseModel):
    """An even-cardinality subset of B = {1, ..., 2g+1, inf}, stored as a bit mask."""

    model_config = ConfigDict(frozen=True)

    g: PositiveInt
    mask: int

    @model_validator(mode="after")
    def _check_even_subset(self) -> "BranchSet":
        if not 0 <= self.mask < 1 << label_count(self.g):
            raise ValueError(f"mask {self.mask:#x} has bits outside the {label_count(self.g)} labels")
        if self.mask.bit_count() % 2:
            raise ValueError(f"odd cardinality {self.mask.bit_count()}: only even subsets belong to G_B")
        return self

    @classmethod
    def from_labels(cls, g: int, labels: Iterable[Label]) -> "BranchSet":
        labels = list(labels)
        mask = labels_to_mask(g, labels)
        if mask.bit_count() != len(labels):
            raise InvalidInputError(f"repeated labels in {labels!r}")
        if mask.bit_count() % 2:
            raise InvalidInputError(f"odd cardinality {len(labels)}: only even subsets belong to G_B")
        return cls(g=g, mask=mask)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def labels(self) -> list[Label]:
        return mask_to_labels(self.g, self.mask)

    def contains(self, label: Label) -> bool:
        """Membership on this concrete representative."""
        return bool(self.mask >> label_to_bit(self.g, label) & 1)

    def complement(self) -> "BranchSet":
        return BranchSet(g=self.g, mask=self.mask ^ ((1 << label_count(self.g)) - 1))

    def to_json(self) -> dict[str, Any]:
        return {"g": self.g, "labels": self.labels()}

    def __str__(self) -> str:
        return "{" + ",".join(str(label) for label in self.labels()) + "}"


class GBClass(BaseModel):
    """An element of G_B, held by its canonical representative (the member without inf)."""

    model_config = ConfigDict(frozen=True)

    g: PositiveInt
    rep: BranchSet

    @model_validator(mode="after")
    def _check_canonical(self) -> "GBClass":
        if self.rep.g != self.g:
            raise ValueError(f"representative genus {self.rep.g} does not match class genus {self.g}")
        if self.rep.mask >> inf_bit(self.g) & 1:
            raise ValueError("canonical representative must not contain inf")
        return self

    @classmethod
    def of(cls, s: BranchSet) -> "GBClass":
        """Class of a concrete even subset."""
        rep = s.complement() if s.contains(INF) else s
        return cls(g=s.g, rep=rep)

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "GBClass":
        return canonical_class(int(data["g"]), [parse_label(x) for x in data["labels"]])

    def labels(self) -> list[Label]:
        return self.rep.labels()

    def to_json(self) -> dict[str, Any]:
        return self.rep.to_json()

    def __str__(self) -> str:
        return str(self.rep)


def canonical_class(g: int, labels: Iterable[Label]) -> GBClass:
    """
    Class of the even subset `labels` of {1, ..., 2g+1, inf}.

    S and its complement give the same class; the stored representative omits inf.

    Raises:
        InvalidInputError: odd cardinality, repeated labels or a label out of range
    """
    return GBClass.of(BranchSet.from_labels(g, labels))


def symm_diff(a: GBClass, b: GBClass) -> GBClass:
    """Group operation of G_B: (A u B) - (A n B) on any representatives."""
    if a.g != b.g:
        raise InvalidInputError(f"genus mismatch: {a.g} vs {b.g}")
    return GBClass.of(BranchSet(g=a.g, mask=a.rep.mask ^ b.rep.mask))


def class_size_pair(a: GBClass) -> tuple[int, int]:
    """(|rep|, 2g+2-|rep|): the sizes of the two representatives of the class."""
    k1 = a.rep.size
    return k1, label_count(a.g) - k1


def enumerate_gb(g: int) -> list[GBClass]:
    """All 2^{2g} classes of G_B, ordered by representative mask."""
    if g < 1:
        raise InvalidInputError(f"genus must be positive, got {g}")
    if g > ENUMERATION_LIMIT:
        raise GenusLimitError(g, ENUMERATION_LIMIT, "enumerate_gb")
    return [
        GBClass(g=g, rep=BranchSet(g=g, mask=mask))
        for mask in range(1 << inf_bit(g))
        if mask.bit_count() % 2 == 0
    ]
