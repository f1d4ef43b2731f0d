import os
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"


def fixture_text(name: str) -> str:
    return (FIXTURES / f"{name}.flp").read_text()


@pytest.fixture
def load_fixture():
    return fixture_text


@pytest.fixture(params=["numba", "numpy"])
def kernel_backend(request, monkeypatch):
    monkeypatch.setenv("FLOORPLAN_KERNELS", request.param)
    return request.param


def pytest_configure(config):
    os.environ.setdefault("FLOORPLAN_KERNELS", "auto")


# --- acceptance report: one line per criterion ---------------------------------

_criteria: dict = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    report = (yield).get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (report.when != "call" and report.passed):
        return
    number, title = mark.args
    status = "PASS" if report.passed else "SKIP" if report.skipped else "FAIL"
    prev = _criteria.get(number, (title, "PASS"))[1]
    # a parametrized criterion passes only if every case does
    worst = max(prev, status, key=["PASS", "SKIP", "FAIL"].index)
    _criteria[number] = (title, worst)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, status = _criteria[number]
        terminalreporter.write_line(f"criterion {number:>2}: {status}  {title}")
