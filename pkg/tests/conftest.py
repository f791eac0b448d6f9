from itertools import combinations

import pytest
from hypothesis import settings, strategies as st

from tokenspectra.graphs import Graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

CRITERIA: list[str] = []


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, frozenset(e for e, b in zip(pairs, mask) if b))


@pytest.fixture
def criterion():
    """Record a one-line acceptance verdict, printed in the terminal summary."""
    def record(label: str, passed: bool, detail: str = ""):
        CRITERIA.append(f"[{'PASS' if passed else 'FAIL'}] {label}" + (f": {detail}" if detail else ""))
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in CRITERIA:
            terminalreporter.write_line(line)
