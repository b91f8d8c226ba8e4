"""Collects acceptance-criterion outcomes and prints one PASS/FAIL line each."""
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

# criterion number -> [title, passed]; passed stays None until a test reports
_outcomes = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            _outcomes.setdefault(mark.args[0], [mark.args[1], None])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    report = outcome.get_result()
    entry = _outcomes[mark.args[0]]
    if report.failed:
        entry[1] = False
    elif report.when == "call" and entry[1] is None:
        entry[1] = report.passed


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_outcomes):
        title, ok = _outcomes[number]
        status = {True: "PASS", False: "FAIL", None: "NOT RUN"}[ok]
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")
