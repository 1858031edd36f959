import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from volterra.core import SkewMatrix  # noqa: E402

_criteria: dict[str, str] = {}


@pytest.fixture
def a4_one():
    """All upper entries 1; pfaffian 1."""
    return SkewMatrix.from_upper([1, 1, 1, 1, 1, 1])


@pytest.fixture
def a4_two():
    """Same entry signs as ``a4_one`` but pfaffian -1/2."""
    return SkewMatrix.from_upper(["1/2", 1, "1/2", "1/2", 1, "1/2"])


@pytest.fixture
def rps():
    return SkewMatrix.from_upper([1, -1, 1])


@pytest.fixture
def transitive3():
    return SkewMatrix.from_upper([1, 1, 1])


@pytest.fixture
def nonstrong4():
    """3-cycle 1->2->3->1, each of 1, 2, 3 beating 4."""
    return SkewMatrix.from_upper([1, -1, 1, 1, 1, 1])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    label = marker.args[0]
    if report.when == "call" or (report.when == "setup" and report.failed):
        _criteria[label] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria, key=lambda s: int(s.split()[0])):
        terminalreporter.write_line(f"[{_criteria[label]}] criterion {label}")
