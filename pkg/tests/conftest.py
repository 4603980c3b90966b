import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))


def pytest_addoption(parser):
    parser.addoption("--slow-mode", action="store_true", default=False,
                     help="run the bijectivity criterion up to k = 5 instead of k = 4")


@pytest.fixture
def slow_mode(request):
    return request.config.getoption("--slow-mode")


@pytest.fixture
def report(capsys):
    """Print one PASS/FAIL line straight to the terminal, then return the verdict."""
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {detail}")
        return ok
    return emit
