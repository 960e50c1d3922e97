import random

import pytest
from hypothesis import strategies as st

from freecumulants.partitions import enumerate_nc


@pytest.fixture
def rng():
    return random.Random(20240611)


def nc_partitions(min_n=1, max_n=8):
    """Strategy drawing a non-crossing partition of a random size."""
    return st.integers(min_n, max_n).flatmap(lambda n: st.sampled_from(enumerate_nc(n)))


def nc_pairs(min_n=1, max_n=8):
    """Two non-crossing partitions of the same size."""
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.tuples(st.sampled_from(enumerate_nc(n)), st.sampled_from(enumerate_nc(n)))
    )


# -- acceptance reporting ------------------------------------------------------

_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _criteria[number] = (title, "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, status = _criteria[number]
        terminalreporter.write_line(f"{status}  criterion {number:2d}: {title}")
