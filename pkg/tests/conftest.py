from __future__ import annotations

import pytest

_criteria: dict[str, list[str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion this test checks")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    label = marker.args[0]
    outcome = "PASS" if call.excinfo is None else "FAIL"
    _criteria.setdefault(label, []).append(outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")

    def order(label: str):
        head = label.split(" ", 1)[0].rstrip(".")
        return (int("".join(c for c in head if c.isdigit()) or 0), label)

    for label in sorted(_criteria, key=order):
        verdict = "FAIL" if "FAIL" in _criteria[label] else "PASS"
        terminalreporter.write_line(f"{verdict}  {label}")
