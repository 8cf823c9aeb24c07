from __future__ import annotations

from collections import defaultdict

import pytest

_results: dict[int, dict] = defaultdict(lambda: {"label": "", "outcomes": [], "seconds": 0.0, "details": []})


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, label): exit criterion of the build")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    number, label = mark.args
    entry = _results[number]
    entry["label"] = label
    if report.when == "call" or (report.when == "setup" and not report.passed):
        entry["outcomes"].append(report.outcome)
        entry["seconds"] += report.duration
        entry["details"] += [v for k, v in item.user_properties if k == "detail"]


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        entry = _results[number]
        outcomes = entry["outcomes"]
        if outcomes and all(o == "passed" for o in outcomes):
            verdict = "PASS"
        elif outcomes and all(o == "skipped" for o in outcomes):
            verdict = "SKIP"
        else:
            verdict = "FAIL"
        line = f"criterion {number} [{verdict}] {entry['label']} ({len(outcomes)} checks, {entry['seconds']:.2f}s)"
        if entry["details"]:
            line += ": " + "; ".join(entry["details"])
        terminalreporter.write_line(line)
