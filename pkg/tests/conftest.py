import time
from contextlib import contextmanager

import pytest

from torsion_cosets.parse import parse_poly

_RESULTS = pytest.StashKey[list]()


@pytest.fixture
def poly():
    return lambda text: parse_poly(text).poly


def pytest_configure(config):
    config.stash[_RESULTS] = []


@pytest.fixture
def criterion(request):
    """Context manager recording one acceptance criterion as PASS/FAIL."""
    results = request.config.stash[_RESULTS]

    @contextmanager
    def run(number, title, budget=None):
        t0 = time.perf_counter()
        ok = False
        detail = ""
        try:
            yield
            elapsed = time.perf_counter() - t0
            ok = budget is None or elapsed < budget
            if not ok:
                detail = f" over budget {budget}s"
                raise AssertionError(f"criterion {number} took {elapsed:.2f}s > {budget}s")
        finally:
            elapsed = time.perf_counter() - t0
            results.append((number, title, ok, elapsed, detail))

    return run


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash.get(_RESULTS, [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, elapsed, detail in sorted(results):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{status} [{number}] {title} ({elapsed:.2f}s){detail}")
