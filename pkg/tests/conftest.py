from collections import OrderedDict

import pytest

_RESULTS = OrderedDict()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or rep.when != "call" and not (rep.when == "setup" and rep.failed):
        return
    number, title = marker.args
    prev = _RESULTS.get(number, (title, True, []))
    ok = prev[1] and rep.passed
    failures = prev[2] + ([item.name] if not rep.passed else [])
    _RESULTS[number] = (title, ok, failures)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        title, ok, failures = _RESULTS[number]
        line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}"
        if failures:
            line += f"  (failed: {', '.join(failures)})"
        terminalreporter.write_line(line)
