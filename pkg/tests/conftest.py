import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        number, title = marker.args
        cases = _criteria.setdefault(number, [title, 0, 0])
        cases[1] += 1
        cases[2] += report.outcome != "passed"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, total, failed = _criteria[number]
        verdict = "FAIL" if failed else "PASS"
        detail = f" [{total - failed}/{total} cases]" if total > 1 else ""
        terminalreporter.write_line(f"AC{number:>2} {verdict}  {title}{detail}")


@pytest.fixture
def rng():
    return np.random.default_rng(20161016)
