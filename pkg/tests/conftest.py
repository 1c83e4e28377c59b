import pathlib
import sys

import numpy as np
import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))

DATA = pathlib.Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def golden_rho4():
    """168 * rho_4, transcribed from the published matrix."""
    return np.loadtxt(DATA / "golden_rho4_x168.txt", dtype=np.int64)


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when == "call" and "test_acceptance.py::test_criterion_" in rep.nodeid:
                name = rep.nodeid.split("test_criterion_")[1]
                number, _, label = name.partition("_")
                lines.append((int(number), f"{outcome.upper()[:4]:4} criterion {int(number):2d}: {label}"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
