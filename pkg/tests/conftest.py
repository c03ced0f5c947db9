import sys
from pathlib import Path

import hypothesis.strategies as st
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from footrule import Permutation  # noqa: E402


def perms(min_n=1, max_n=12):
    return st.integers(min_n, max_n).flatmap(lambda n: st.permutations(range(1, n + 1))).map(Permutation)


def perms_of(n):
    return st.permutations(range(1, n + 1)).map(Permutation)


_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance" in report.nodeid and (report.when == "call" or report.outcome != "passed"):
        name = report.nodeid.split("::")[-1]
        _acceptance.setdefault(name, report.outcome)
        if report.outcome != "passed":
            _acceptance[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_acceptance.items()):
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else outcome.upper():7} {name}")


@pytest.fixture
def p():
    from footrule import parse

    return parse
