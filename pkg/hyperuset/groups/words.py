"""Random words over a generating family of Sp_{2g}(Z), for property checks and sampling."""

from functools import cache
from itertools import combinations
from typing import Literal

import numpy as np

from hyperuset.errors import InvalidInputError
from hyperuset.groups.symplectic import SymplecticMatrix, j_form

Family = Literal["full", "gamma12"]

DEFAULT_WORD_LENGTH = 20


def translation(s: np.ndarray) -> SymplecticMatrix:
    """T_s = (1 s; 0 1) for an integer symmetric s."""
    g = s.shape[0]
    eye = np.identity(g, dtype=int)
    return SymplecticMatrix.from_blocks(eye, s, np.zeros((g, g), dtype=int), eye)


def block_gl(a: np.ndarray, a_inv_t: np.ndarray) -> SymplecticMatrix:
    """(A 0; 0 A^{-T}) for A in GL_g(Z)."""
    g = a.shape[0]
    zero = np.zeros((g, g), dtype=int)
    return SymplecticMatrix.from_blocks(a, zero, zero, a_inv_t)


def _unit(g: int, i: int, j: int) -> np.ndarray:
    e = np.zeros((g, g), dtype=int)
    e[i, j] = 1
    return e


def partial_swap(g: int, i: int) -> SymplecticMatrix:
    """J_i = (1 - e_ii, e_ii; -e_ii, 1 - e_ii), the swap of a_i and b_i alone."""
    e = _unit(g, i, i)
    rest = np.identity(g, dtype=int) - e
    return SymplecticMatrix.from_blocks(rest, e, -e, rest)


@cache
def generators(g: int, family: Family = "full") -> tuple[SymplecticMatrix, ...]:
    """
    Generating family used for random words.

    "full": J, T_{+-s} for symmetric 0/1 s with at most two nonzero entries, and block-GL
    elementary transvections 1 +- e_ij. "gamma12": the members lying in Gamma_{1,2}, i.e. J,
    T_{+-s} with s of even diagonal (e_ij + e_ji and 2 e_ii), the block-GL elements, and the partial
    swaps J_i for g > 1.
    """
    if family not in ("full", "gamma12"):
        raise InvalidInputError(f"unknown generator family {family!r}")
    if g < 1:
        raise InvalidInputError(f"genus must be positive, got {g}")
    shifts: list[np.ndarray] = []
    for i in range(g):
        shifts.append(2 * _unit(g, i, i) if family == "gamma12" else _unit(g, i, i))
    for i, j in combinations(range(g), 2):
        shifts.append(_unit(g, i, j) + _unit(g, j, i))
        if family == "full":
            shifts.append(_unit(g, i, i) + _unit(g, j, j))

    gens = [SymplecticMatrix.from_array(j_form(g))]
    for s in shifts:
        gens.append(translation(s))
        gens.append(translation(-s))
    eye = np.identity(g, dtype=int)
    for i in range(g):
        for j in range(g):
            if i == j:
                continue
            for sign in (1, -1):
                gens.append(block_gl(eye + sign * _unit(g, i, j), eye - sign * _unit(g, j, i)))
    if family == "gamma12" and g > 1:
        gens.extend(partial_swap(g, i) for i in range(g))
    return tuple(gens)


def random_word(
    g: int,
    rng: np.random.Generator,
    length: int = DEFAULT_WORD_LENGTH,
    family: Family = "full",
) -> SymplecticMatrix:
    """Product of `length` generators drawn uniformly from `generators(g, family)`."""
    gens = generators(g, family)
    product = np.identity(2 * g, dtype=int).astype(object)
    for k in rng.integers(0, len(gens), size=length):
        product = product.dot(gens[int(k)].array)
    return SymplecticMatrix.from_array(product)
