"""Event Stream - append-only JSONL journal of verification runs."""

import json
from datetime import datetime
from enum import Enum
from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field


class EventType(str, Enum):
    """Types of events in a run journal."""

    RUN_START = "run_start"
    CHECK = "check"
    RESULT = "result"
    ERROR = "error"
    COMPLETION = "completion"


class Event(BaseModel):
    """A single journal entry."""

    timestamp: datetime = Field(default_factory=datetime.now)
    event_type: EventType
    content: dict[str, Any]
    metadata: dict[str, Any] = Field(default_factory=dict)

    def to_display_string(self) -> str:
        """One-line rendering for terminals and replay."""
        time_str = self.timestamp.strftime("%H:%M:%S")

        if self.event_type == EventType.RUN_START:
            params = ", ".join(f"{k}={v}" for k, v in self.content.get("params", {}).items())
            return f"[{time_str}] START {self.content.get('suite', '')}({params})"
        elif self.event_type == EventType.CHECK:
            status = "ok" if self.content.get("passed") else "FAIL"
            return f"[{time_str}] CHECK {self.content.get('name', '')}: {status}"
        elif self.event_type == EventType.RESULT:
            verdict = "PASS" if self.content.get("success") else "FAIL"
            return f"[{time_str}] RESULT {verdict}: {self.content.get('output', '')}"
        elif self.event_type == EventType.COMPLETION:
            return f"[{time_str}] COMPLETED in {self.content.get('elapsed', 0.0):.2f}s"
        elif self.event_type == EventType.ERROR:
            return f"[{time_str}] ERROR {self.content.get('code', 'error')}: {self.content.get('error', '')}"

        return f"[{time_str}] {self.event_type.value.upper()}: {self.content}"


class EventStream:
    """
    Chronological journal for one run session.

    Every event is written to `events.jsonl` as soon as it is appended; an existing
    journal in the session directory is loaded on construction.
    """

    def __init__(self, session_dir: Path) -> None:
        self.session_dir = session_dir
        self.session_dir.mkdir(parents=True, exist_ok=True)
        self.events_file = session_dir / "events.jsonl"
        self.events: list[Event] = []
        self._load_events()

    def _load_events(self) -> None:
        if self.events_file.exists():
            with open(self.events_file) as f:
                for line in f:
                    if line.strip():
                        self.events.append(Event(**json.loads(line)))

    def append(self, event: Event) -> None:
        """Append an event and persist it."""
        self.events.append(event)

        with open(self.events_file, "a") as f:
            f.write(event.model_dump_json() + "\n")

    def record(self, event_type: EventType, **content: Any) -> Event:
        event = Event(event_type=event_type, content=content)
        self.append(event)
        return event

    def get_recent(self, limit: int = 20) -> list[Event]:
        return self.events[-limit:] if len(self.events) > limit else self.events

    def get_by_type(self, event_type: EventType) -> list[Event]:
        return [e for e in self.events if e.event_type == event_type]

    def to_context_string(self, limit: int | None = None) -> str:
        """
        Render the journal, one event per line.

        Args:
            limit: Maximum number of recent events to include (None = all)
        """
        events_to_format = self.get_recent(limit) if limit else self.events
        return "\n".join(event.to_display_string() for event in events_to_format)

    def failed_checks(self) -> list[Event]:
        return [e for e in self.get_by_type(EventType.CHECK) if not e.content.get("passed")]

    def has_completion(self) -> bool:
        return any(e.event_type == EventType.COMPLETION for e in self.events)

    def __len__(self) -> int:
        return len(self.events)

    def __repr__(self) -> str:
        return f"EventStream(session={self.session_dir.name}, events={len(self.events)})"
