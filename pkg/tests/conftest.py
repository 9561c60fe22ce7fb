import re
import time

import pytest

from cubic14.witness import load_fixture

_ACCEPTANCE = {}
_SETUP = {}


@pytest.fixture(scope="session")
def surface_bundle():
    return load_fixture("surface_typeII_p5")


@pytest.fixture(scope="session")
def surface(surface_bundle):
    return surface_bundle.scheme("S")


@pytest.fixture(scope="session")
def surface_lines(surface_bundle):
    return surface_bundle.line_schemes()


@pytest.fixture(scope="session")
def k3():
    return load_fixture("k3_genus7_p7").scheme("K3")


@pytest.fixture(scope="session")
def fixture_report(surface_bundle):
    from cubic14.pipeline import run_verification

    t0 = time.perf_counter()
    report = run_verification(surface_bundle)
    report.elapsed = time.perf_counter() - t0
    return report


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    key = int(m.group(1))
    if report.when == "setup":
        _SETUP[key] = report.duration
        if report.outcome != "passed":
            _ACCEPTANCE[key] = (m.group(2), report.outcome, round(report.duration, 1))
    elif report.when == "call":
        _ACCEPTANCE[key] = (m.group(2), report.outcome, round(report.duration + _SETUP.get(key, 0), 1))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_ACCEPTANCE):
        name, outcome, secs = _ACCEPTANCE[key]
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {key} [{status}] {name.replace('_', ' ')} ({secs} s)")
