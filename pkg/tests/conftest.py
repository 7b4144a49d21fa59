import os

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# Upper bound for size-parametrized tests; CI can lower it.
NMAX = int(os.environ.get("TETRAPOSET_NMAX", "7"))


def upto(n: int, start: int = 1) -> list[int]:
    return list(range(start, min(n, NMAX) + 1))


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", help="run n = 6/7 exhaustive checks")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow") or os.environ.get("TETRAPOSET_SLOW") == "1":
        return
    skip = pytest.mark.skip(reason="slow; use --runslow or TETRAPOSET_SLOW=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


# One summary line per acceptance criterion.
_CRITERIA: list[tuple[int, str, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _CRITERIA.append((marker.args[0], marker.args[1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    labels = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}
    for number, title, outcome in sorted(_CRITERIA):
        terminalreporter.write_line(f"criterion {number:>2}: {labels.get(outcome, outcome.upper())}  {title}")
