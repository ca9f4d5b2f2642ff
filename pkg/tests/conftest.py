import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from randcpd import ChangePointSet  # noqa: E402


@st.composite
def change_point_sets(draw, n=None, max_n=60):
    if n is None:
        n = draw(st.integers(2, max_n))
    points = draw(st.sets(st.integers(1, n - 1), max_size=n - 1)) if n > 1 else set()
    return ChangePointSet(n, tuple(sorted(points)))


@st.composite
def change_point_pairs(draw, max_n=60):
    n = draw(st.integers(2, max_n))
    return draw(change_point_sets(n=n)), draw(change_point_sets(n=n))


_acceptance_lines = []


@pytest.fixture
def acceptance_report():
    """Record one PASS/FAIL line per acceptance criterion."""

    def record(label, ok, detail=""):
        _acceptance_lines.append(f"[{'PASS' if ok else 'FAIL'}] {label}" + (f" -- {detail}" if detail else ""))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
