import pathlib

import pytest

from aspdebug import parse_interpretation, parse_program

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion."""
    lines = []
    for outcome, tag in (("passed", "PASS"), ("failed", "FAIL"), ("skipped", "SKIP")):
        for rep in terminalreporter.stats.get(outcome, ()):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py" in nodeid:
                lines.append(f"{tag}  {nodeid.split('::')[-1]}")
    if lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in sorted(lines, key=lambda s: s.split()[-1]):
            terminalreporter.write_line(line)


def load_program(name):
    return parse_program((FIXTURES / name).read_text())


def load_interpretation(name):
    return parse_interpretation((FIXTURES / name).read_text())


@pytest.fixture(scope="session")
def lucy1():
    return load_program("lucy1.lp")


@pytest.fixture(scope="session")
def lucy2():
    return load_program("lucy2.lp")


@pytest.fixture(scope="session")
def lucy_fixed():
    return load_program("lucy_fixed.lp")


@pytest.fixture(scope="session")
def linus1():
    return load_program("linus1.lp")


@pytest.fixture(scope="session")
def linus_fixed():
    return load_program("linus_fixed.lp")


@pytest.fixture(scope="session")
def patty1():
    return load_program("patty1.lp")


@pytest.fixture(scope="session")
def s1():
    return load_interpretation("s1.int")


@pytest.fixture(scope="session")
def e1():
    return load_interpretation("e1.int")


@pytest.fixture(scope="session")
def e2():
    return load_interpretation("e2.int")


@pytest.fixture(scope="session")
def s3():
    return load_interpretation("s3.int")


@pytest.fixture(scope="session")
def e3():
    return load_interpretation("e3.int")


@pytest.fixture(scope="session")
def s4():
    return load_interpretation("s4.int")


@pytest.fixture(scope="session")
def e4():
    return load_interpretation("e4.int")
