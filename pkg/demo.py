"""Scripted walkthrough: verification suites with a journal, then the vanishing criterion."""

import tempfile
from pathlib import Path

from hyperuset.config import Settings
from hyperuset.eta.maps import base_eta
from hyperuset.eta.usets import u_set
from hyperuset.groups.siegel import SiegelPoint
from hyperuset.memory.event_stream import EventStream
from hyperuset.runner import SuiteRunner
from hyperuset.theta.tables import check_vanishing_criterion, two_torsion_table

GENERIC_G2 = [[0.8 + 1.2j, 0.3 + 0.1j], [0.3 + 0.1j, -0.4 + 1.5j]]


def main() -> None:
    settings = Settings.from_env()
    journal_root = settings.journal_dir or Path(tempfile.mkdtemp(prefix="hyperuset_demo_"))
    runner = SuiteRunner(journal_root)

    for g in (1, 2, 3):
        runner.run("verify-main", g=g)
        assert runner.last_session is not None
        print(EventStream(runner.last_session).to_context_string())
        print()

    runner.run("orders", g=2)
    assert runner.last_session is not None
    print(EventStream(runner.last_session).to_context_string())
    print()

    eta = base_eta(2)
    print(f"base eta (g=2): {[str(xi) for xi in eta.images]}")
    print(f"U = {u_set(eta)}")
    for label, entries in (("generic", GENERIC_G2), ("i*1", [[1j, 0], [0, 1j]])):
        omega = SiegelPoint(entries)
        table = two_torsion_table(omega, settings.theta)
        report = check_vanishing_criterion(omega, eta, settings.theta, table=table)
        print(f"{label}: {table.summary()} criterion holds: {report.holds}")

    print(f"\nJournals: {journal_root}")


if __name__ == "__main__":
    main()
