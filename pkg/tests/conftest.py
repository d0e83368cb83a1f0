import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

SUITE_BUDGET_S = 30.0

# criterion number -> (passed so far, title)
_criteria = {}
_started = time.perf_counter()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = tuple(marker.args)


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    number, title = marker
    ok, _ = _criteria.get(number, (True, title))
    if report.failed or (report.when == "call" and report.skipped):
        ok = False
    _criteria[number] = (ok, title)


def _elapsed():
    return time.perf_counter() - _started


def pytest_sessionfinish(session, exitstatus):
    session.config._suite_elapsed = _elapsed()
    # the runtime budget is itself an acceptance criterion
    if _criteria and session.config._suite_elapsed > SUITE_BUDGET_S and exitstatus == 0:
        session.exitstatus = 1


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _criteria:
        return
    elapsed = getattr(config, "_suite_elapsed", _elapsed())
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        ok, title = _criteria[number]
        if number == 15:
            ok = ok and elapsed <= SUITE_BUDGET_S
            title = f"{title} (suite ran {elapsed:.1f} s of {SUITE_BUDGET_S:.0f} s)"
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}")
