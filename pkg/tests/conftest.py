"""Collects one pass/fail line per acceptance criterion for the terminal summary."""

import pytest

_RESULTS: dict[int, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and report.passed:
        return
    number, text = marker.args
    state = "PASS" if report.passed else "FAIL"
    # a failure in any phase sticks
    if _RESULTS.get(number, ("PASS",))[0] == "FAIL":
        return
    if report.when == "call" or report.failed:
        _RESULTS[number] = (state, text)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        state, text = _RESULTS[number]
        terminalreporter.write_line(f"[{state}] criterion {number:2d}: {text}")
