import sys
from pathlib import Path

import pytest

TESTS = Path(__file__).resolve().parent
sys.path.insert(0, str(TESTS))

from camplet.lang.parser import parse_program  # noqa: E402

PROGRAMS = TESTS.parent / "src" / "camplet" / "programs"


def program_text(name: str) -> str:
    return (PROGRAMS / f"{name}.cpl").read_text()


def load(name: str):
    return parse_program(program_text(name))


@pytest.fixture
def programs_dir() -> Path:
    return PROGRAMS


def pytest_terminal_summary(terminalreporter):
    lines = getattr(sys.modules.get("test_acceptance"), "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
