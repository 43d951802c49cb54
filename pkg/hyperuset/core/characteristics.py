"""Half-integer theta characteristics over F_2: parity, the symplectic pairing and azygetic triples.

A characteristic xi = (xi_1, xi_2) in (1/2 Z)^{2g} / Z^{2g} is stored through its doubled
coordinates x = 2 xi mod 2, packed into one integer `code` that reads a1..ag b1..bg as a
binary number (a1 most significant). Parity and pairing are then popcounts.
"""

from collections.abc import Iterable, Sequence
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, PositiveInt, model_validator

from hyperuset.errors import GenusLimitError, InvalidInputError

ENUMERATION_LIMIT = 12


def split_code(g: int, code: int) -> tuple[int, int]:
    """(top, bottom) halves of a code, each a g-bit integer with index 1 most significant."""
    return code >> g, code & ((1 << g) - 1)


def parity_of_code(g: int, code: int) -> int:
    """+1 or -1: exp(4 pi i xi_1^T xi_2) on a packed characteristic."""
    top, bottom = split_code(g, code)
    return -1 if (top & bottom).bit_count() & 1 else 1


def pairing_of_codes(g: int, x: int, y: int) -> int:
    """4 b(xi, zeta) mod 2 = top(x).bottom(y) + bottom(x).top(y) mod 2."""
    xt, xb = split_code(g, x)
    yt, yb = split_code(g, y)
    return ((xt & yb) ^ (xb & yt)).bit_count() & 1


def rank_of_codes(codes: Iterable[int]) -> int:
    """F_2 rank of packed vectors (xor basis keyed by leading bit)."""
    basis: dict[int, int] = {}
    for v in codes:
        while v:
            lead = v.bit_length() - 1
            if lead not in basis:
                basis[lead] = v
                break
            v ^= basis[lead]
    return len(basis)


class Characteristic(BaseModel):
    """A theta characteristic with half-integer entries, held exactly as bits."""

    model_config = ConfigDict(frozen=True)

    g: PositiveInt
    code: int

    @model_validator(mode="after")
    def _check_range(self) -> "Characteristic":
        if not 0 <= self.code < 1 << (2 * self.g):
            raise ValueError(f"code {self.code} outside 0..{(1 << 2 * self.g) - 1} for g={self.g}")
        return self

    @classmethod
    def from_halves(cls, top: Sequence[int], bottom: Sequence[int]) -> "Characteristic":
        """
        Build from the numerators of xi_1 and xi_2 (entries 0 or 1, meaning 0 or 1/2).

        Args:
            top: bits of 2 xi_1 mod 2
            bottom: bits of 2 xi_2 mod 2
        """
        if len(top) != len(bottom) or not top:
            raise InvalidInputError(f"top and bottom must have the same positive length, got {len(top)}, {len(bottom)}")
        return cls.from_vector([*top, *bottom])

    @classmethod
    def from_vector(cls, bits: Sequence[int] | np.ndarray) -> "Characteristic":
        """Build from the doubled coordinate vector (top || bottom); entries are taken mod 2."""
        values = [int(b) % 2 for b in bits]
        if len(values) % 2 or not values:
            raise InvalidInputError(f"characteristic vector must have even positive length, got {len(values)}")
        code = 0
        for b in values:
            code = code << 1 | b
        return cls(g=len(values) // 2, code=code)

    @classmethod
    def from_code(cls, g: int, code: int) -> "Characteristic":
        return cls(g=g, code=code)

    @classmethod
    def zero(cls, g: int) -> "Characteristic":
        return cls(g=g, code=0)

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "Characteristic":
        return cls.from_halves(data["top"], data["bottom"])

    @property
    def top(self) -> tuple[int, ...]:
        return tuple(self.code >> (2 * self.g - 1 - k) & 1 for k in range(self.g))

    @property
    def bottom(self) -> tuple[int, ...]:
        return tuple(self.code >> (self.g - 1 - k) & 1 for k in range(self.g))

    def vector(self) -> np.ndarray:
        """Doubled coordinates (top || bottom) as a uint8 vector."""
        return np.array(self.top + self.bottom, dtype=np.uint8)

    def halves(self) -> tuple[np.ndarray, np.ndarray]:
        """(xi_1, xi_2) as real vectors with entries in {0, 1/2}."""
        return np.array(self.top, dtype=float) / 2, np.array(self.bottom, dtype=float) / 2

    def to_json(self) -> dict[str, list[int]]:
        return {"top": list(self.top), "bottom": list(self.bottom)}

    def __str__(self) -> str:
        return "[" + " ".join(map(str, self.top)) + " | " + " ".join(map(str, self.bottom)) + "]"


def _same_genus(*chars: Characteristic) -> int:
    g = chars[0].g
    if any(c.g != g for c in chars):
        raise InvalidInputError(f"genus mismatch: {[c.g for c in chars]}")
    return g


def parity(xi: Characteristic) -> int:
    """e_*(xi) = exp(4 pi i xi_1^T xi_2), returned as +1 or -1."""
    return parity_of_code(xi.g, xi.code)


def add(xi: Characteristic, zeta: Characteristic) -> Characteristic:
    """Sum in (1/2 Z)^{2g} / Z^{2g}."""
    g = _same_genus(xi, zeta)
    return Characteristic(g=g, code=xi.code ^ zeta.code)


def pairing(xi: Characteristic, zeta: Characteristic) -> int:
    """4 xi^T J zeta mod 2; 1 is the case that twists parity under addition."""
    g = _same_genus(xi, zeta)
    return pairing_of_codes(g, xi.code, zeta.code)


def quadratic_form(x: Sequence[int] | np.ndarray) -> int:
    """Q(x) = sum_i x_i x_{g+i} over F_2 on a doubled coordinate vector."""
    v = np.asarray(x, dtype=np.int64) % 2
    g = v.size // 2
    return int(np.dot(v[:g], v[g:]) % 2)


def is_azygetic_triple(xi: Characteristic, zeta: Characteristic, mu: Characteristic) -> bool:
    """
    True iff e_*(xi) e_*(zeta) e_*(mu) e_*(xi + zeta + mu) = -1.

    Raises:
        InvalidInputError: the three characteristics are not pairwise distinct
    """
    g = _same_genus(xi, zeta, mu)
    if len({xi.code, zeta.code, mu.code}) < 3:
        raise InvalidInputError(f"azygetic test needs distinct characteristics, got {xi}, {zeta}, {mu}")
    return azygetic_codes(g, xi.code, zeta.code, mu.code)


def azygetic_codes(g: int, x: int, y: int, z: int) -> bool:
    product = parity_of_code(g, x) * parity_of_code(g, y) * parity_of_code(g, z) * parity_of_code(g, x ^ y ^ z)
    return product == -1


def enumerate_characteristics(g: int) -> list[Characteristic]:
    """All 2^{2g} characteristics in code order."""
    if g < 1:
        raise InvalidInputError(f"genus must be positive, got {g}")
    if g > ENUMERATION_LIMIT:
        raise GenusLimitError(g, ENUMERATION_LIMIT, "enumerate_characteristics")
    return [Characteristic(g=g, code=code) for code in range(1 << (2 * g))]


def enumerate_by_parity(g: int) -> tuple[list[Characteristic], list[Characteristic]]:
    """(evens, odds), each in code order."""
    evens: list[Characteristic] = []
    odds: list[Characteristic] = []
    for xi in enumerate_characteristics(g):
        (evens if parity(xi) == 1 else odds).append(xi)
    return evens, odds


def span_rank(chars: Iterable[Characteristic]) -> int:
    return rank_of_codes(c.code for c in chars)
