import re

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion\[criterion_(\d+)\]")
_results = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or report.failed:
        _results[int(m.group(1))] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    from test_acceptance import CRITERIA

    terminalreporter.section("acceptance criteria")
    for number, title, _ in CRITERIA:
        if number in _results:
            terminalreporter.write_line(f"criterion {number:2d} {title}: {_results[number]}")
