import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from finring.specs import construct  # noqa: E402
from finring.theorems import load_catalog  # noqa: E402

ACCEPTANCE_LINES = []


def zn(n):
    return {"kind": "zn", "n": n}


F2 = zn(2)
SPECS = {
    "Z6": zn(6),
    "M2F2": {"kind": "matrix", "base": F2, "k": 2},
    "T2F2": {"kind": "triangular", "base": F2, "k": 2},
    "T2F3": {"kind": "triangular", "base": zn(3), "k": 2},
    "Z1": zn(1),
}

# T2(F2) element indices: [[a, b], [0, c]] -> 4a + 2b + c
E11, E12, E22, ID = 4, 2, 1, 5


@pytest.fixture(scope="session")
def rings():
    return {k: construct(v) for k, v in SPECS.items()}


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()


@pytest.fixture(scope="session")
def catalog_rings(catalog):
    return [(e.label, construct(e.spec)) for e in catalog]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
