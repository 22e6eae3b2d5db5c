import pytest

from infon import Finite, Universe, new_atom


@pytest.fixture
def universe():
    return Universe()


@pytest.fixture
def atom(universe):
    """``atom(v, o)`` makes a fresh atom; ``o=None`` means unbounded."""
    from infon import UNBOUNDED

    def make(value, order=None):
        return new_atom(universe, value, UNBOUNDED if order is None else Finite(order))

    return make


# One PASS/FAIL line per acceptance criterion, printed after the run.

_ACCEPTANCE: dict[int, list] = {}  # n -> [title, all_passed]


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        n, title = marker.args
        slot = _ACCEPTANCE.setdefault(n, [title, True])
        slot[1] = slot[1] and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n, (title, passed) in sorted(_ACCEPTANCE.items()):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {n:>2}: {status}  {title}")
