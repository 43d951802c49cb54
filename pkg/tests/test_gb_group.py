"""Tests for the group G_B of even branch subsets modulo complement."""

from itertools import product

import pytest
from pydantic import ValidationError

from hyperuset.core.gb_group import (
    INF,
    BranchSet,
    GBClass,
    canonical_class,
    class_size_pair,
    enumerate_gb,
    symm_diff,
)
from hyperuset.errors import GenusLimitError, InvalidInputError


def test_canonical_class_examples():
    """Test identity, the full set and complement selection at g=1."""
    assert canonical_class(1, []).labels() == []
    assert canonical_class(1, [1, 2, 3, INF]).labels() == []
    assert canonical_class(1, [3, INF]).labels() == [1, 2]


def test_canonical_class_complement_invariance():
    """Test that S and its complement give the same class."""
    s = canonical_class(2, [1, 4])
    assert canonical_class(2, [2, 3, 5, INF]) == s


def test_canonical_class_rejects_bad_input():
    """Test odd cardinality, out-of-range and repeated labels."""
    with pytest.raises(InvalidInputError):
        canonical_class(1, [1])
    with pytest.raises(InvalidInputError):
        canonical_class(1, [1, 4])
    with pytest.raises(InvalidInputError):
        canonical_class(1, [0, 1])
    with pytest.raises(InvalidInputError):
        canonical_class(1, [1, 1])


def test_branch_set_rejects_odd_mask():
    """Test that only even subsets are admitted."""
    with pytest.raises(ValidationError):
        BranchSet(g=1, mask=0b0001)


def test_class_rejects_rep_with_inf():
    """Test the canonical-representative invariant."""
    with pytest.raises(ValidationError):
        GBClass(g=1, rep=BranchSet(g=1, mask=0b1100))


def test_symm_diff_examples():
    """Test the worked symmetric differences."""
    a = canonical_class(1, [1, 2])
    assert symm_diff(a, a) == canonical_class(1, [])
    assert symm_diff(a, canonical_class(1, [])) == a
    assert symm_diff(a, canonical_class(1, [2, 3])) == canonical_class(1, [1, 3])


def test_symm_diff_genus_mismatch():
    """Test that classes of different genus do not combine."""
    with pytest.raises(InvalidInputError):
        symm_diff(canonical_class(1, []), canonical_class(2, []))


@pytest.mark.parametrize("g", [1, 2, 3])
def test_group_laws(g):
    """Test commutativity, associativity, identity and exponent 2 exhaustively."""
    elements = enumerate_gb(g)
    identity = canonical_class(g, [])
    for a in elements:
        assert symm_diff(a, identity) == a
        assert symm_diff(a, a) == identity
    for a, b in product(elements, repeat=2):
        assert symm_diff(a, b) == symm_diff(b, a)
    sample = elements[:8]
    for a, b, c in product(sample, repeat=3):
        assert symm_diff(symm_diff(a, b), c) == symm_diff(a, symm_diff(b, c))


@pytest.mark.parametrize("g, count", [(1, 4), (2, 16), (3, 64)])
def test_enumerate_gb_counts(g, count):
    """Test that there are 2^{2g} distinct classes."""
    elements = enumerate_gb(g)
    assert len(elements) == count
    assert len(set(elements)) == count


def test_enumerate_gb_order_g1():
    """Test the listed order at g=1."""
    assert [c.labels() for c in enumerate_gb(1)] == [[], [1, 2], [1, 3], [2, 3]]


def test_enumerate_gb_limit():
    """Test the explicit genus guard."""
    with pytest.raises(GenusLimitError) as exc:
        enumerate_gb(13)
    assert exc.value.limit == 12


@pytest.mark.parametrize("g", [1, 2, 3])
def test_canonicalization_idempotent(g):
    """Test canonical_class(rep(a)) = a."""
    for a in enumerate_gb(g):
        assert canonical_class(g, a.labels()) == a


def test_class_size_pair():
    """Test the representative sizes."""
    assert class_size_pair(canonical_class(1, [])) == (0, 4)
    assert class_size_pair(canonical_class(1, [1, 2])) == (2, 2)
    assert class_size_pair(canonical_class(2, [1, 2, 3, 4])) == (4, 2)


def test_json_round_trip():
    """Test the documented JSON encoding with 'inf' as a label."""
    s = BranchSet.from_labels(1, [3, INF])
    assert s.to_json() == {"g": 1, "labels": [3, "inf"]}
    assert s.contains(INF)
    assert not s.complement().contains(INF)
    c = GBClass.of(s)
    assert GBClass.from_json(c.to_json()) == c
    assert GBClass.from_json({"g": 1, "labels": ["3", "inf"]}) == c
    assert str(c) == "{1,2}"
