import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_criteria = []


@pytest.fixture
def criterion():
    def record(number, passed, detail):
        _criteria.append((number, passed, detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, passed, detail in sorted(_criteria, key=lambda c: c[0]):
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {detail}")
