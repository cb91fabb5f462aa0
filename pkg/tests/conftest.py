import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from blowup import graphs


@pytest.fixture(scope="session")
def corpus6():
    """Connected graphs up to isomorphism, 1 to 6 vertices."""
    return [g for n in range(1, 7) for g in graphs.enumerate_connected_graphs(n, dedup=True)]


@pytest.fixture(scope="session")
def corpus7():
    """Connected graphs up to isomorphism, 1 to 7 vertices."""
    return [g for n in range(1, 8) for g in graphs.enumerate_connected_graphs(n, dedup=True)]


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One verdict line per acceptance criterion at the end of the run."""
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if getattr(rep, "when", None) != "call":
                continue
            if "test_acceptance" not in rep.nodeid:
                continue
            name = rep.nodeid.split("::")[-1]
            rows.append((name, "PASS" if outcome == "passed" else "FAIL"))
    if rows:
        terminalreporter.write_sep("=", "acceptance criteria")
        for name, verdict in sorted(rows):
            terminalreporter.write_line(f"{verdict}  {name}")
