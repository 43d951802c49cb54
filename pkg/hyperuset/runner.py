"""Suite runner - executes verification suites and journals each run."""

import time
from datetime import datetime
from pathlib import Path
from typing import Any

from hyperuset.errors import HyperUError
from hyperuset.memory.event_stream import EventStream, EventType
from hyperuset.suites import SUITES, Suite, SuiteResult


class SuiteRunner:
    """
    Runs suites by name.

    With a journal root every run gets its own timestamped session directory holding
    `events.jsonl`; without one nothing is written.
    """

    def __init__(self, journal_root: Path | None = None) -> None:
        """
        Args:
            journal_root: Directory for run sessions (None disables the journal)
        """
        self.journal_root = journal_root
        if journal_root is not None:
            journal_root.mkdir(parents=True, exist_ok=True)
        self.last_session: Path | None = None

    def _open_journal(self, suite: Suite) -> EventStream | None:
        if self.journal_root is None:
            return None
        session_id = datetime.now().strftime("%Y%m%d_%H%M%S_%f")
        session_dir = self.journal_root / f"{session_id}_{suite.name}"
        self.last_session = session_dir
        return EventStream(session_dir)

    def run(self, name: str, **params: Any) -> SuiteResult:
        """
        Run the suite registered under `name`.

        Library errors are journaled and re-raised; failed checks come back in the result.
        """
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}; known: {sorted(SUITES)}")
        suite = SUITES[name]()
        journal = self._open_journal(suite)
        started = time.perf_counter()
        if journal is not None:
            journal.record(EventType.RUN_START, suite=suite.name, params=params)

        try:
            result = suite.run(**params)
        except HyperUError as e:
            if journal is not None:
                journal.record(EventType.ERROR, code=e.code, error=str(e))
            raise

        if journal is not None:
            for check in result.checks:
                journal.record(EventType.CHECK, name=check.name, passed=check.passed, detail=check.detail)
            journal.record(EventType.RESULT, success=result.success, output=result.output)
            journal.record(EventType.COMPLETION, elapsed=time.perf_counter() - started)
        return result
