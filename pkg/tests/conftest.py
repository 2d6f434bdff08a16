from contextlib import contextmanager

import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance():
    """Context manager that records one pass/fail line per criterion.

    The lines are echoed immediately (visible with -s) and replayed in the
    terminal summary so they survive output capture.
    """

    @contextmanager
    def criterion(num, label):
        try:
            yield
        except BaseException:
            line = f"[acceptance] C{num} {label}: FAIL"
            ACCEPTANCE_LINES.append(line)
            print(line)
            raise
        line = f"[acceptance] C{num} {label}: PASS"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return criterion


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.write_line("")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
