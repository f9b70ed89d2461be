import pytest

from twistedcenter import cache


@pytest.fixture(autouse=True, scope="session")
def no_disk_cache():
    cache.configure(None)
    yield


def pytest_terminal_summary(terminalreporter):
    from tests import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
