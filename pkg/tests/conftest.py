"""Shared pytest plumbing: a collector that prints one line per acceptance
criterion in the terminal summary, pass or fail."""

import pytest

_criterion_lines: list = []


def record_criterion(line: str) -> None:
    _criterion_lines.append(line)


@pytest.fixture
def criterion_recorder():
    return record_criterion


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _criterion_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_criterion_lines):
            terminalreporter.write_line(line)
