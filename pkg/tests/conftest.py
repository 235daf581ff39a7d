import pytest

from lclaw import graph


@pytest.fixture
def debug(monkeypatch):
    """Turn on the package's internal consistency assertions."""
    monkeypatch.setattr(graph, "DEBUG", True)


def pytest_terminal_summary(terminalreporter):
    import criteria

    if criteria.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in criteria.summary_lines():
            terminalreporter.write_line(line)
