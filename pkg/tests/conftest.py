import pytest

from chamberlocal import corpus


@pytest.fixture(scope="session")
def planar():
    return corpus.planar(extra=True)


@pytest.fixture(scope="session")
def all_arrangements():
    return corpus.corpus(extra=True)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
