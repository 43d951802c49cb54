"""Tests for the suite runner and its journal."""

import pytest

from hyperuset.errors import GenusLimitError
from hyperuset.memory.event_stream import EventStream, EventType
from hyperuset.runner import SuiteRunner
from hyperuset.suites import SUITES, GroupOrderSuite, MainTheoremSuite


@pytest.fixture
def runner(tmp_path):
    """Runner journaling under a temporary directory."""
    return SuiteRunner(tmp_path / "runs")


def test_registry():
    """Test the bundled suite names."""
    assert SUITES == {"verify-main": MainTheoremSuite, "orders": GroupOrderSuite}
    assert repr(MainTheoremSuite()) == "MainTheoremSuite(name='verify-main')"


def test_verify_main_journal(runner):
    """Test a passing run and the events it leaves behind."""
    result = runner.run("verify-main", g=2)

    assert result.success
    assert result.metadata["orbit_size"] == 10
    assert result.to_json()["verdict"] == "PASS"

    assert runner.last_session is not None
    assert runner.last_session.name.endswith("_verify-main")
    journal = EventStream(runner.last_session)
    types = [e.event_type for e in journal.events]
    assert types[0] == EventType.RUN_START
    assert types[-2:] == [EventType.RESULT, EventType.COMPLETION]
    assert len(journal.get_by_type(EventType.CHECK)) == len(result.checks) == 4
    assert journal.failed_checks() == []


def test_orders_suite(runner):
    """Test the enumeration suite at g=1."""
    result = runner.run("orders", g=1)
    assert result.success
    assert {c.name for c in result.checks} >= {"sp_order", "parity_preserving_order", "u_set_stabilizer"}
    assert result.metadata["quotient"] == 3


def test_unknown_suite(runner):
    """Test that an unknown name is rejected before anything is written."""
    with pytest.raises(KeyError):
        runner.run("nope")
    assert runner.last_session is None


def test_library_error_is_journaled(runner):
    """Test that a genus-limit error is recorded and re-raised."""
    with pytest.raises(GenusLimitError):
        runner.run("orders", g=3)

    journal = EventStream(runner.last_session)
    errors = journal.get_by_type(EventType.ERROR)
    assert len(errors) == 1
    assert errors[0].content["code"] == "genus_limit"
    assert not journal.has_completion()


def test_runner_without_journal():
    """Test that no journal root means no session directory."""
    runner = SuiteRunner()
    assert runner.run("verify-main", g=1).success
    assert runner.last_session is None


def test_first_run_writes_events_file(runner):
    """Test that a fresh, empty session still receives the run events."""
    runner.run("verify-main", g=1)

    events_file = runner.last_session / "events.jsonl"
    assert events_file.exists()
    lines = events_file.read_text().splitlines()
    assert len(lines) == len(EventStream(runner.last_session)) >= 4
