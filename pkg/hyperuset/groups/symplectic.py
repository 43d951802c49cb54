"""Exact integer symplectic matrices, the subgroups Gamma_{1,2} and Gamma(2), and the order formulas."""

from collections.abc import Sequence
from functools import cached_property
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, PositiveInt, model_validator

from hyperuset.core.characteristics import Characteristic
from hyperuset.errors import InvalidInputError
from hyperuset.groups.f2 import SpF2Matrix, has_even_diagonals

IntMatrix = Sequence[Sequence[int]] | np.ndarray


def j_form(g: int) -> np.ndarray:
    """J = (0 1; -1 0) as an exact (object dtype) integer matrix."""
    j = np.zeros((2 * g, 2 * g), dtype=object)
    j[:g, g:] = np.identity(g, dtype=int)
    j[g:, :g] = -np.identity(g, dtype=int)
    return j


def as_int_matrix(m: IntMatrix) -> np.ndarray:
    """Square integer matrix as an object array of Python ints (arbitrary precision)."""
    arr = np.array(m, dtype=object)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise InvalidInputError(f"expected a square matrix, got shape {arr.shape}")
    if arr.shape[0] % 2:
        raise InvalidInputError(f"symplectic matrices have even size, got {arr.shape[0]}")
    if arr.shape[0] == 0:
        raise InvalidInputError("empty matrix")
    out = np.empty(arr.shape, dtype=object)
    for idx, value in np.ndenumerate(arr):
        if isinstance(value, bool) or int(value) != value:
            raise InvalidInputError(f"non-integer entry {value!r} at {idx}")
        out[idx] = int(value)
    return out


def is_symplectic(m: IntMatrix) -> bool:
    """True iff M^T J M = J exactly."""
    arr = as_int_matrix(m)
    j = j_form(arr.shape[0] // 2)
    return bool(np.array_equal(arr.T.dot(j).dot(arr), j))


class SymplecticMatrix(BaseModel):
    """An element of Sp_{2g}(Z), entries exact; gamma^T J gamma = J is checked on construction."""

    model_config = ConfigDict(frozen=True)

    g: PositiveInt
    entries: tuple[tuple[int, ...], ...]

    @model_validator(mode="after")
    def _check_symplectic(self) -> "SymplecticMatrix":
        n = 2 * self.g
        if len(self.entries) != n or any(len(row) != n for row in self.entries):
            raise ValueError(f"expected a {n}x{n} matrix for g={self.g}")
        if not is_symplectic(self.entries):
            raise ValueError("matrix is not symplectic: gamma^T J gamma != J")
        return self

    @classmethod
    def from_array(cls, m: IntMatrix) -> "SymplecticMatrix":
        arr = as_int_matrix(m)
        return cls(g=arr.shape[0] // 2, entries=tuple(tuple(int(x) for x in row) for row in arr))

    @classmethod
    def from_blocks(cls, a: IntMatrix, b: IntMatrix, c: IntMatrix, d: IntMatrix) -> "SymplecticMatrix":
        return cls.from_array(np.block([[np.array(a, dtype=object), np.array(b, dtype=object)],
                                        [np.array(c, dtype=object), np.array(d, dtype=object)]]))

    @classmethod
    def identity(cls, g: int) -> "SymplecticMatrix":
        return cls.from_array(np.identity(2 * g, dtype=int))

    @classmethod
    def j(cls, g: int) -> "SymplecticMatrix":
        return cls.from_array(j_form(g))

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.entries, dtype=object)
        arr.flags.writeable = False
        return arr

    @property
    def A(self) -> np.ndarray:
        return self.array[: self.g, : self.g]

    @property
    def B(self) -> np.ndarray:
        return self.array[: self.g, self.g :]

    @property
    def C(self) -> np.ndarray:
        return self.array[self.g :, : self.g]

    @property
    def D(self) -> np.ndarray:
        return self.array[self.g :, self.g :]

    def __matmul__(self, other: "SymplecticMatrix") -> "SymplecticMatrix":
        if other.g != self.g:
            raise InvalidInputError(f"genus mismatch: {self.g} vs {other.g}")
        return SymplecticMatrix.from_array(self.array.dot(other.array))

    def inverse(self) -> "SymplecticMatrix":
        """gamma^{-1} = J^{-1} gamma^T J."""
        j = j_form(self.g)
        return SymplecticMatrix.from_array((-j).dot(self.array.T).dot(j))

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def __str__(self) -> str:
        return str(self.to_json())


def is_gamma12(gamma: SymplecticMatrix) -> bool:
    """Membership in Gamma_{1,2}: the diagonals of A^T C and B^T D are even."""
    return has_even_diagonals(gamma.array)


def is_gamma2(gamma: SymplecticMatrix) -> bool:
    """Membership in Gamma(2): gamma = 1 (mod 2)."""
    return reduce_mod2(gamma).is_identity()


def inverse_transpose(gamma: SymplecticMatrix) -> SymplecticMatrix:
    """gamma^{-T} = (D -C; -B A)."""
    return SymplecticMatrix.from_blocks(gamma.D, -gamma.C, -gamma.B, gamma.A)


def reduce_mod2(gamma: SymplecticMatrix) -> SpF2Matrix:
    """Entrywise image in Sp_{2g}(F_2)."""
    return SpF2Matrix(g=gamma.g, bits=tuple(tuple(x % 2 for x in row) for row in gamma.entries))


def act_on_characteristic(gamma: SymplecticMatrix | SpF2Matrix, xi: Characteristic) -> Characteristic:
    """
    Coordinates of a two-torsion point after a change of symplectic basis: gamma^{-T} xi.

    Integer matrices act through their reduction mod 2 (integer translates leave the class in
    (1/2 Z)^{2g} / Z^{2g} unchanged); an SpF2Matrix is read as that reduction.
    """
    f2 = reduce_mod2(gamma) if isinstance(gamma, SymplecticMatrix) else gamma
    if f2.g != xi.g:
        raise InvalidInputError(f"genus mismatch: matrix g={f2.g}, characteristic g={xi.g}")
    return f2.inverse_transpose().apply(xi)


class GroupOrders(BaseModel):
    """Orders of Sp_{2g}(F_2), of the parity-preserving subgroup, and their quotient."""

    model_config = ConfigDict(frozen=True)

    sp_f2: int
    o_plus: int
    quotient: int

    def to_json(self) -> dict[str, Any]:
        return self.model_dump()


def order_formulas(g: int) -> GroupOrders:
    """
    Exact group orders for genus g.

    #Sp_{2g}(F_2) = 2^{g^2} prod_{i=1}^{g} (2^{2i} - 1)
    #O^+_{2g}(F_2) = 2 * 2^{g(g-1)} (2^g - 1) prod_{i=1}^{g-1} (2^{2i} - 1)
    """
    if g < 1:
        raise InvalidInputError(f"genus must be positive, got {g}")
    sp_f2 = 1 << (g * g)
    for i in range(1, g + 1):
        sp_f2 *= (1 << (2 * i)) - 1
    o_plus = 2 * (1 << (g * (g - 1))) * ((1 << g) - 1)
    for i in range(1, g):
        o_plus *= (1 << (2 * i)) - 1
    quotient, remainder = divmod(sp_f2, o_plus)
    if remainder:
        raise ArithmeticError(f"order quotient is not exact for g={g}")
    return GroupOrders(sp_f2=sp_f2, o_plus=o_plus, quotient=quotient)
