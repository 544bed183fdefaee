import json
from pathlib import Path

import pytest

from motzkinflags.cli import load_code

DATA = Path(__file__).resolve().parent.parent / "data"

_acceptance_lines: list[str] = []


@pytest.fixture
def acceptance_report():
    def report(label: str, ok: bool, detail: str = "") -> None:
        _acceptance_lines.append(f"[{'PASS' if ok else 'FAIL'}] {label}" + (f"  ({detail})" if detail else ""))

    return report


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


def _load(name):
    return load_code(json.loads((DATA / name).read_text()))


@pytest.fixture
def code_partial():
    """Type (1,3,5) code on F_2^6 with four flags."""
    return _load("partial_type_n6.json")


@pytest.fixture
def code_three():
    """Full flag code on F_2^4 with three flags."""
    return _load("full_three_flags_n4.json")


@pytest.fixture
def code_two():
    return _load("full_two_flags_n4.json")
