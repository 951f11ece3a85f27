import pytest

from nwfsets import SetSystem
from oracles import from_hf, hf_stage

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def sys():
    return SetSystem()


def v_elements(s: SetSystem, n: int) -> list[int]:
    """Nodes for the elements of V_n, built from the frozenset oracle."""
    return sorted(from_hf(s, x) for x in hf_stage(n))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
