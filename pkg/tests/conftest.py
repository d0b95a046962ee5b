import pytest

from triplelink.instances import GenParams, random_doodle, random_link

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def link_corpus():
    return [random_link(GenParams(seed=s)) for s in range(200)]


@pytest.fixture(scope="session")
def doodle_corpus():
    return [random_doodle(GenParams(seed=10_000 + s)) for s in range(100)]
