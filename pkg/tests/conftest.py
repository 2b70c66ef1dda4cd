from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

import hypothesis.strategies as st
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from quatrep import Quaternion  # noqa: E402

rationals = st.builds(Fraction, st.integers(-30, 30), st.integers(1, 12))
quaternions = st.builds(Quaternion, rationals, rationals, rationals, rationals)
nonzero_quaternions = quaternions.filter(lambda q: not q.is_zero())


_acceptance_lines: list[str] = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        status = "PASS" if report.passed else "FAIL"
        _acceptance_lines.append(f"{status}  {report.nodeid.split('::')[-1]}")


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


@pytest.fixture
def q_examples():
    return [Quaternion(1, 2, 3, 4), Quaternion(5, -1, 1, -1), Quaternion(Fraction(1, 2), 0, Fraction(-3, 7), 2)]
