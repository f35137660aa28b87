import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from itertools import permutations

import pytest

from shapeinv.oracle import sweep

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def tables():
    """Exhaustive shape tables for n = 1..10, swept once per session."""
    return {n: sweep(n) for n in range(1, 11)}


@pytest.fixture(scope="session")
def s_n():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = list(permutations(range(1, n + 1)))
        return cache[n]

    return get


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
