import pytest

_LINES = {}


@pytest.fixture
def criterion():
    """criterion(k, text, ok): record and print one acceptance line, then assert."""

    def report(k, text, ok):
        line = f"{'PASS' if ok else 'FAIL'} criterion {k:2d}: {text}"
        _LINES[k] = line
        print(line)
        assert ok, line

    return report


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(_LINES):
            terminalreporter.write_line(_LINES[k])
