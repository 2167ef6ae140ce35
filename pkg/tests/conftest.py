import pytest

from hesslab.golden import load_b3
from hesslab.rootcore import build_root_system


@pytest.fixture(scope="session")
def b3():
    return build_root_system("B", 3)


@pytest.fixture(scope="session")
def tables():
    return load_b3()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
