"""Run journal for verification suites."""

from hyperuset.memory.event_stream import Event, EventStream, EventType

__all__ = ["Event", "EventStream", "EventType"]
