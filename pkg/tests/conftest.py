import pytest

from primewheel.oracle import eratosthenes_flags


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session")
def prime_flags():
    """Eratosthenes flags covering every candidate with wheel index <= 10**5."""
    return eratosthenes_flags(6 * 10**5 + 1)


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the test still asserts on its own."""

    def record(passed, detail):
        line = f"[{'PASS' if passed else 'FAIL'}] {request.node.name}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
