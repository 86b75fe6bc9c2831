"""Replays the acceptance gate's per-criterion lines after output capture."""

import sys


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get(
        "tests.test_acceptance"
    )
    if mod is not None and mod.REPORT_LINES:
        terminalreporter.section("acceptance criteria")
        for line in mod.REPORT_LINES:
            terminalreporter.write_line(line)
