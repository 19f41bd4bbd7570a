"""Shared pytest hooks: aggregate acceptance checks into one summary line each.

Tests marked ``@pytest.mark.acceptance(num, label)`` are grouped by ``num``;
after the run a single PASS/FAIL line is printed per group.  Expected
failures (strict xfail) count as passing because the recorded expectation
held.
"""
from __future__ import annotations

import pytest


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "acceptance(num, label): acceptance check this test contributes to",
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is not None:
        report.acceptance = (marker.args[0], marker.args[1])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    groups: dict[int, dict] = {}
    for bucket, failed in (
        ("passed", False),
        ("xfailed", False),
        ("failed", True),
        ("error", True),
    ):
        for report in terminalreporter.stats.get(bucket, []):
            tag = getattr(report, "acceptance", None)
            if tag is None:
                continue
            num, label = tag
            entry = groups.setdefault(num, {"label": label, "failed": False})
            entry["failed"] = entry["failed"] or failed
    if not groups:
        return
    writer = terminalreporter
    writer.section("acceptance checks")
    for num in sorted(groups):
        entry = groups[num]
        verdict = "FAIL" if entry["failed"] else "PASS"
        writer.write_line(f"check {num:2d}: {verdict}  {entry['label']}")
