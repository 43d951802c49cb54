"""Sp_{2g}(F_2): symplectic matrices mod 2, transvections, and exhaustive enumeration.

Over F_2 the form J = (0 1; -1 0) becomes (0 1; 1 0); it is symmetric and squares to the
identity, so M^{-T} = J M J for every symplectic M.
"""

import logging
from collections import deque
from collections.abc import Iterable, Sequence
from functools import cached_property

import numpy as np
from pydantic import BaseModel, ConfigDict, PositiveInt, model_validator

from hyperuset.core.characteristics import Characteristic
from hyperuset.errors import GenusLimitError, InvalidInputError

logger = logging.getLogger(__name__)

EXHAUSTIVE_LIMIT = 2


def j_form_f2(g: int) -> np.ndarray:
    j = np.zeros((2 * g, 2 * g), dtype=np.uint8)
    j[:g, g:] = np.identity(g, dtype=np.uint8)
    j[g:, :g] = np.identity(g, dtype=np.uint8)
    return j


def is_symplectic_f2(m: np.ndarray) -> bool:
    m = np.asarray(m, dtype=np.int64) % 2
    j = j_form_f2(m.shape[0] // 2).astype(np.int64)
    return bool(np.array_equal(m.T @ j @ m % 2, j))


def all_vectors(g: int) -> np.ndarray:
    """Every doubled characteristic vector, row k holding the vector of code k."""
    n = 2 * g
    codes = np.arange(1 << n, dtype=np.int64)
    return ((codes[:, None] >> np.arange(n - 1, -1, -1)) & 1).astype(np.int64)


def has_even_diagonals(m: np.ndarray) -> bool:
    """diag(A^T C) and diag(B^T D) all even; depends only on the entries mod 2."""
    g = m.shape[0] // 2
    a, b, c, d = m[:g, :g], m[:g, g:], m[g:, :g], m[g:, g:]
    # diag(X^T Y)_j = sum_i X_ij Y_ij
    diag_ac = (a * c).sum(axis=0)
    diag_bd = (b * d).sum(axis=0)
    return all(int(x) % 2 == 0 for x in (*diag_ac, *diag_bd))


def _q(vectors: np.ndarray, g: int) -> np.ndarray:
    return (vectors[..., :g] * vectors[..., g:]).sum(axis=-1) % 2


class SpF2Matrix(BaseModel):
    """A 2g x 2g matrix over F_2, symplectic for (0 1; 1 0)."""

    model_config = ConfigDict(frozen=True)

    g: PositiveInt
    bits: tuple[tuple[int, ...], ...]

    @model_validator(mode="after")
    def _check_symplectic(self) -> "SpF2Matrix":
        n = 2 * self.g
        if len(self.bits) != n or any(len(row) != n for row in self.bits):
            raise ValueError(f"expected a {n}x{n} matrix for g={self.g}")
        if any(b not in (0, 1) for row in self.bits for b in row):
            raise ValueError("F_2 matrix entries must be 0 or 1")
        if not is_symplectic_f2(np.array(self.bits)):
            raise ValueError("matrix is not symplectic over F_2")
        return self

    @classmethod
    def from_array(cls, m: np.ndarray | Sequence[Sequence[int]]) -> "SpF2Matrix":
        arr = np.asarray(m, dtype=np.int64) % 2
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] % 2:
            raise InvalidInputError(f"expected a square matrix of even size, got shape {arr.shape}")
        return cls(g=arr.shape[0] // 2, bits=tuple(tuple(int(x) for x in row) for row in arr))

    @classmethod
    def identity(cls, g: int) -> "SpF2Matrix":
        return cls.from_array(np.identity(2 * g, dtype=np.int64))

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.bits, dtype=np.int64)
        arr.flags.writeable = False
        return arr

    def __matmul__(self, other: "SpF2Matrix") -> "SpF2Matrix":
        if other.g != self.g:
            raise InvalidInputError(f"genus mismatch: {self.g} vs {other.g}")
        return SpF2Matrix.from_array(self.array @ other.array % 2)

    def inverse_transpose(self) -> "SpF2Matrix":
        """(D C; B A), the mod-2 image of (D -C; -B A)."""
        j = j_form_f2(self.g).astype(np.int64)
        return SpF2Matrix.from_array(j @ self.array @ j % 2)

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.array, np.identity(2 * self.g, dtype=np.int64)))

    def apply(self, xi: Characteristic) -> Characteristic:
        """M x on the doubled coordinates of xi."""
        if xi.g != self.g:
            raise InvalidInputError(f"genus mismatch: matrix g={self.g}, characteristic g={xi.g}")
        return Characteristic.from_vector(self.array @ xi.vector().astype(np.int64) % 2)

    def apply_many(self, chars: Iterable[Characteristic]) -> list[Characteristic]:
        chars = list(chars)
        if not chars:
            return []
        x = np.stack([c.vector() for c in chars]).astype(np.int64)
        return [Characteristic.from_vector(row) for row in x @ self.array.T % 2]

    def has_even_diagonals(self) -> bool:
        """The diagonal test of Gamma_{1,2} on the 0/1 lift of this matrix."""
        return has_even_diagonals(self.array)

    def preserves_parity(self) -> bool:
        """The action x -> M^{-T} x fixes the parity of all 2^{2g} characteristics."""
        x = all_vectors(self.g)
        y = x @ self.inverse_transpose().array.T % 2
        return bool(np.array_equal(_q(x, self.g), _q(y, self.g)))

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.bits]


def transvection(v: Characteristic) -> SpF2Matrix:
    """x -> x + <x, v> v, i.e. 1 + v v^T J."""
    vec = v.vector().astype(np.int64)
    j = j_form_f2(v.g).astype(np.int64)
    return SpF2Matrix.from_array(np.identity(2 * v.g, dtype=np.int64) + np.outer(vec, vec) @ j)


def transvection_generators(g: int) -> list[SpF2Matrix]:
    """The 2^{2g} - 1 symplectic transvections, one per nonzero v, in code order of v."""
    if g < 1:
        raise InvalidInputError(f"genus must be positive, got {g}")
    return [transvection(Characteristic(g=g, code=code)) for code in range(1, 1 << (2 * g))]


def generated_group_order(generators: Sequence[SpF2Matrix], limit: int = 2_000_000) -> int:
    """Order of the group generated by `generators`, by breadth-first closure from the identity."""
    if not generators:
        return 1
    g = generators[0].g
    gens = [m.array for m in generators]
    start = np.identity(2 * g, dtype=np.int64)
    seen = {start.tobytes()}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for gen in gens:
            nxt = gen @ current % 2
            key = nxt.tobytes()
            if key not in seen:
                if len(seen) >= limit:
                    raise InvalidInputError(f"closure exceeds {limit} elements")
                seen.add(key)
                queue.append(nxt)
    logger.debug("closure of %d generators at g=%d has %d elements", len(gens), g, len(seen))
    return len(seen)


def enumerate_sp_f2(g: int) -> np.ndarray:
    """
    Every element of Sp_{2g}(F_2) as an array of shape (order, 2g, 2g).

    Scans all 2^{4g^2} matrices, so only g <= 2 is accepted.
    """
    if g < 1:
        raise InvalidInputError(f"genus must be positive, got {g}")
    if g > EXHAUSTIVE_LIMIT:
        raise GenusLimitError(g, EXHAUSTIVE_LIMIT, "exhaustive Sp(2g, F_2) enumeration")
    n = 2 * g
    idx = np.arange(1 << (n * n), dtype=np.int64)
    mats = ((idx[:, None] >> np.arange(n * n)) & 1).reshape(-1, n, n)
    j = j_form_f2(g).astype(np.int64)
    forms = np.transpose(mats, (0, 2, 1)) @ j @ mats % 2
    keep = (forms == j).all(axis=(1, 2))
    return mats[keep]


def parity_preserving_mask(mats: np.ndarray, g: int) -> np.ndarray:
    """Boolean mask over a stack of F_2 symplectic matrices: which preserve every parity."""
    j = j_form_f2(g).astype(np.int64)
    inv_t = j @ mats @ j % 2
    x = all_vectors(g)
    y = np.einsum("vj,kij->kvi", x, inv_t) % 2
    return (_q(y, g) == _q(x, g)[None, :]).all(axis=1)


def enumerate_parity_group(g: int) -> tuple[int, int]:
    """(#Sp_{2g}(F_2), #parity-preserving subgroup) by exhaustive enumeration, g <= 2."""
    mats = enumerate_sp_f2(g)
    preserving = int(parity_preserving_mask(mats, g).sum())
    return int(mats.shape[0]), preserving
