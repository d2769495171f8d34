import pytest

from distinct_squares import analyze

RUNNING = "ababaaababa"
ROTATION = "abaaabaababaaabaaa"
BOUNDARY = "abaabab"

# criterion lines collected by test_acceptance, echoed after the run
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def running():
    return analyze(RUNNING)


@pytest.fixture(scope="session")
def rotation():
    return analyze(ROTATION)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
