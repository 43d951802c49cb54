"""Tests for Sp_{2g}(F_2), transvections and the parity-preserving subgroup."""

import numpy as np
import pytest
from pydantic import ValidationError

from hyperuset.core.characteristics import Characteristic
from hyperuset.errors import GenusLimitError
from hyperuset.groups.f2 import (
    SpF2Matrix,
    enumerate_parity_group,
    enumerate_sp_f2,
    generated_group_order,
    is_symplectic_f2,
    transvection,
    transvection_generators,
)


def test_rejects_non_symplectic():
    """Test the F_2 symplectic check."""
    with pytest.raises(ValidationError):
        SpF2Matrix.from_array([[1, 1], [1, 1]])


@pytest.mark.parametrize("g, group, preserving", [(1, 6, 2), (2, 720, 72)])
def test_enumerate_parity_group(g, group, preserving):
    """Test the exhaustive group and subgroup orders."""
    assert enumerate_parity_group(g) == (group, preserving)


def test_enumerate_limit():
    """Test that exhaustive enumeration stops at g=2."""
    with pytest.raises(GenusLimitError):
        enumerate_sp_f2(3)


@pytest.mark.parametrize("g, count", [(1, 3), (2, 15), (3, 63)])
def test_transvection_count(g, count):
    """Test one transvection per nonzero vector, each symplectic."""
    gens = transvection_generators(g)
    assert len(gens) == count
    assert all(is_symplectic_f2(m.array) for m in gens)


def test_transvection_formula():
    """Test x -> x + <x, v> v on a g=1 example."""
    v = Characteristic.from_halves([1], [0])
    t = transvection(v)
    assert t.apply(Characteristic.from_halves([0], [1])) == Characteristic.from_halves([1], [1])
    assert t.apply(v) == v
    assert (t @ t).is_identity()


@pytest.mark.parametrize("g, order", [(1, 6), (2, 720)])
def test_transvection_closure(g, order):
    """Test that the transvections generate Sp_{2g}(F_2)."""
    assert generated_group_order(transvection_generators(g)) == order


@pytest.mark.parametrize("g", [1, 2])
def test_even_diagonals_iff_parity_preserving(g):
    """Test the diagonal test on the 0/1 lift against parity preservation, over every element."""
    for m in enumerate_sp_f2(g):
        mat = SpF2Matrix.from_array(m)
        assert mat.has_even_diagonals() == mat.preserves_parity()


def test_inverse_transpose_is_inverse():
    """Test M^{-T} via J M J."""
    for m in enumerate_sp_f2(1):
        mat = SpF2Matrix.from_array(m)
        inv = SpF2Matrix.from_array(mat.inverse_transpose().array.T)
        assert (mat @ inv).is_identity()


def test_apply_many_matches_apply():
    """Test the batched action."""
    mat = SpF2Matrix.from_array(enumerate_sp_f2(2)[100])
    chars = [Characteristic.from_code(2, c) for c in range(16)]
    assert mat.apply_many(chars) == [mat.apply(c) for c in chars]
    assert mat.apply_many([]) == []
    assert np.array_equal(SpF2Matrix.from_array(mat.to_json()).array, mat.array)
