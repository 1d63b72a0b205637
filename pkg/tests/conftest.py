import pytest

from knotdelta.corpus import builtin_corpus


@pytest.fixture(scope="session")
def corpus():
    return builtin_corpus()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
