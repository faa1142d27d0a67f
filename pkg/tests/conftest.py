from __future__ import annotations

import pytest
from hypothesis import settings

from ydnichols.double import drinfeld_double
from ydnichols.hopfcore import build_bicrossed_product, preset
from ydnichols.nichols import DEFAULT_NMAX
from ydnichols.repcat import catalog
from ydnichols.sweep import run_sweep

settings.register_profile("repo", max_examples=40, deadline=None)
settings.load_profile("repo")


@pytest.fixture(scope="session")
def h():
    return build_bicrossed_product(preset("Hc_sigma0"))


@pytest.fixture(scope="session")
def d(h):
    return drinfeld_double(h)


@pytest.fixture(scope="session")
def cat():
    return catalog()


@pytest.fixture(scope="session")
def sweep(h):
    """Full catalog sweep at the default cutoff, shared by several test files."""
    return {r.label: r for r in run_sweep(h, DEFAULT_NMAX)}


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
