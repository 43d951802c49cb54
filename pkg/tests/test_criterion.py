"""Tests for two-torsion theta tables and the vanishing criterion."""

import numpy as np
import pytest

from hyperuset.core.characteristics import Characteristic, enumerate_by_parity
from hyperuset.errors import GenusLimitError, InvalidInputError
from hyperuset.eta.maps import EtaMap, base_eta, transform_eta
from hyperuset.eta.orbit import u_orbit_representatives
from hyperuset.eta.usets import u_set
from hyperuset.groups.siegel import SiegelPoint, act_on_siegel
from hyperuset.groups.words import random_word
from hyperuset.theta.tables import (
    CSV_HEADER,
    check_vanishing_criterion,
    two_torsion_point,
    two_torsion_table,
    vanishing_pattern,
)


@pytest.fixture
def generic_table(generic_g2):
    """Two-torsion table of the fixed genus-2 matrix."""
    return two_torsion_table(generic_g2)


def test_two_torsion_point(generic_g2):
    """Test z = Omega xi_1 + xi_2."""
    xi = Characteristic.from_halves([1, 0], [0, 1])
    expected = generic_g2.matrix[:, 0] / 2 + np.array([0.0, 0.5])
    assert np.allclose(two_torsion_point(generic_g2, xi), expected)


@pytest.mark.parametrize("tau", [1j, 0.3 + 0.9j, -0.45 + 0.6j, 2j])
def test_genus_one_pattern(tau):
    """Test that only the odd characteristic vanishes for every tau."""
    table = two_torsion_table(SiegelPoint.scalar(tau))
    assert vanishing_pattern(table) == {Characteristic.from_halves([1], [1])}
    assert table.summary()["vanishing"] == 1


def test_generic_genus_two_pattern(generic_table):
    """Test that exactly the six odd characteristics vanish."""
    _, odds = enumerate_by_parity(2)
    assert vanishing_pattern(generic_table) == set(odds)
    assert generic_table.summary() == {
        "characteristics": 16,
        "vanishing": 6,
        "vanishing_even": 0,
        "vanishing_odd": 6,
    }


def test_random_genus_two_patterns(make_omega):
    """Test that the vanishing pattern is the odd set on random generic matrices."""
    _, odds = enumerate_by_parity(2)
    for _ in range(20):
        assert vanishing_pattern(two_torsion_table(make_omega(2))) == set(odds)


def test_diagonal_pattern(diagonal_g2):
    """Test the decomposable matrix: seven zeros, one of them even."""
    summary = two_torsion_table(diagonal_g2).summary()
    assert summary["vanishing"] == 7
    assert summary["vanishing_even"] == 1


@pytest.mark.parametrize("tau", [1j, 0.3 + 0.9j, -0.4 + 1.7j, 0.5 + 0.5j])
def test_criterion_genus_one(tau):
    """Test the criterion for the base eta map at g=1."""
    report = check_vanishing_criterion(SiegelPoint.scalar(tau), base_eta(1))
    assert report.holds
    assert report.vanishing == 1
    assert report.failures == ()


def test_criterion_generic_genus_two(generic_g2, generic_table):
    """Test the criterion on the fixed matrix, reusing its table."""
    report = check_vanishing_criterion(generic_g2, base_eta(2), table=generic_table)
    assert report.holds
    assert report.vanishing == 6
    assert report.to_json()["u"] == {"g": 2, "labels": [3, 4, "inf"]}


def test_criterion_random_genus_two(make_omega):
    """Test the criterion on random non-decomposable matrices."""
    for _ in range(10):
        assert check_vanishing_criterion(make_omega(2), base_eta(2)).holds


def test_criterion_fails_on_decomposable_matrix(diagonal_g2):
    """Test that the extra even zero of i 1_2 breaks the criterion for every U-set."""
    table = two_torsion_table(diagonal_g2)
    reps = u_orbit_representatives(2)
    assert len(reps) == 10
    for eta in reps.values():
        report = check_vanishing_criterion(diagonal_g2, eta, table=table)
        assert not report.holds
        assert len(report.failures) == 1
        failure = report.failures[0]
        assert failure.vanishes
        assert 3 in failure.sizes


def test_criterion_invariant_under_gamma12_g1(rng, tau_i):
    """Test that moving Omega and eta together by Gamma_{1,2} keeps U and the criterion at g=1."""
    eta = base_eta(1)
    for _ in range(20):
        gamma = random_word(1, rng, length=4, family="gamma12")
        moved = transform_eta(gamma, eta)
        assert u_set(moved) == u_set(eta)
        assert check_vanishing_criterion(act_on_siegel(gamma, tau_i), moved).holds


def test_criterion_invariant_under_gamma12_g2(rng, generic_g2):
    """Test the same invariance on the generic genus-2 matrix with short words."""
    eta = base_eta(2)
    for _ in range(8):
        gamma = random_word(2, rng, length=3, family="gamma12")
        moved = transform_eta(gamma, eta)
        assert u_set(moved) == u_set(eta)
        assert check_vanishing_criterion(act_on_siegel(gamma, generic_g2), moved).holds


def test_criterion_guards(generic_g2, tau_i, generic_table):
    """Test genus mismatch, the genus cap and a mismatched table."""
    with pytest.raises(InvalidInputError):
        check_vanishing_criterion(generic_g2, base_eta(1))
    with pytest.raises(InvalidInputError):
        check_vanishing_criterion(tau_i, base_eta(1), table=generic_table)
    with pytest.raises(GenusLimitError):
        check_vanishing_criterion(SiegelPoint(1j * np.identity(5)), EtaMap.from_codes(5, [0] * 11))


def test_table_limit():
    """Test the two-torsion table genus cap."""
    with pytest.raises(GenusLimitError):
        two_torsion_table(SiegelPoint(1j * np.identity(7)))


def test_rows_and_json(tau_i):
    """Test the CSV rows and the JSON rendering."""
    table = two_torsion_table(tau_i)
    rows = table.rows()
    assert len(rows) == 4
    assert len(rows[0]) == len(CSV_HEADER)
    assert rows[0][:2] == ("0", "0")
    assert rows[3][:2] == ("1", "1")
    assert rows[3][-1] is True
    data = table.to_json()
    assert data["summary"]["vanishing"] == 1
    assert data["values"][0]["top"] == "0"
    assert abs(data["values"][0]["re"] - 1.086434811213308) <= 1e-12
