"""Tests for the run journal."""

import json

import pytest

from hyperuset.memory.event_stream import Event, EventStream, EventType


@pytest.fixture
def stream(tmp_path):
    """Empty journal in a temporary session directory."""
    return EventStream(tmp_path / "session")


def test_record_persists_jsonl(stream):
    """Test that each event is one JSON line on disk."""
    stream.record(EventType.RUN_START, suite="orders", params={"g": 1})
    stream.record(EventType.CHECK, name="sp_order", passed=True, detail={})

    lines = stream.events_file.read_text().splitlines()
    assert len(lines) == 2
    assert json.loads(lines[0])["event_type"] == "run_start"
    assert len(stream) == 2


def test_reload_from_disk(stream):
    """Test that a second stream on the same directory sees earlier events."""
    stream.record(EventType.RESULT, success=True, output="ok")
    stream.record(EventType.COMPLETION, elapsed=0.5)

    # Re-open
    reopened = EventStream(stream.session_dir)
    assert len(reopened) == 2
    assert reopened.has_completion()
    assert reopened.events[0].content["output"] == "ok"


def test_failed_checks_and_filters(stream):
    """Test type filters and the failed-check view."""
    stream.record(EventType.CHECK, name="a", passed=True)
    stream.record(EventType.CHECK, name="b", passed=False)
    stream.record(EventType.ERROR, code="genus_limit", error="too big")

    assert [e.content["name"] for e in stream.failed_checks()] == ["b"]
    assert len(stream.get_by_type(EventType.CHECK)) == 2
    assert len(stream.get_recent(1)) == 1
    assert not stream.has_completion()


def test_display_strings(stream):
    """Test the one-line renderings."""
    stream.record(EventType.RUN_START, suite="verify-main", params={"g": 2})
    stream.record(EventType.CHECK, name="orbit_equals_admissible", passed=False)
    stream.record(EventType.ERROR, code="internal", error="boom")
    stream.record(EventType.COMPLETION, elapsed=1.25)

    text = stream.to_context_string()
    assert "START verify-main(g=2)" in text
    assert "CHECK orbit_equals_admissible: FAIL" in text
    assert "ERROR internal: boom" in text
    assert "COMPLETED in 1.25s" in text
    assert stream.to_context_string(limit=1).count("\n") == 0


def test_event_model_round_trip():
    """Test that an event survives its JSON form."""
    event = Event(event_type=EventType.RESULT, content={"success": False, "output": "x"})
    assert Event(**json.loads(event.model_dump_json())) == event
    assert "RESULT FAIL: x" in event.to_display_string()


def test_empty_stream_has_no_events(stream):
    """Test that a fresh stream is empty but still usable."""
    assert len(stream) == 0
    assert stream.to_context_string() == ""
    stream.record(EventType.RUN_START, suite="orders", params={})
    assert len(stream) == 1
