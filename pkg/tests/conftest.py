from pathlib import Path

import pytest

from quiver_components.quiver import load_quiver

DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def kron():
    return load_quiver(DATA / "kronecker.json")


@pytest.fixture(scope="session")
def q42():
    return load_quiver(DATA / "ex42.json")


@pytest.fixture(scope="session")
def q51():
    return load_quiver(DATA / "ex51.json")


@pytest.fixture(scope="session")
def q52():
    return load_quiver(DATA / "ex52.json")


def pytest_terminal_summary(terminalreporter):
    from acceptance_report import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
