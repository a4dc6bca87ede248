import random

import pytest

ACCEPTANCE_RESULTS = {}


def random_seq(rng, n, sigma):
    return [rng.randrange(sigma) for _ in range(n)]


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, label = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {label}")
