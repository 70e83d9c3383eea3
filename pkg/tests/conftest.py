"""Shared fixtures: acceptance-line recording and oracle import path.

Acceptance tests open a named criterion context and record exactly one
pass/fail verdict inside it; the terminal summary then prints one line per
criterion. A body that raises before recording is reported as a failed
criterion rather than silently dropped.
"""
import contextlib
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))  # for `import oracle_values`

_LINES = []


@pytest.fixture
def criterion():
    @contextlib.contextmanager
    def open_criterion(name):
        recorded = []

        def rec(passed, detail=""):
            recorded.append(None)
            _LINES.append((name, bool(passed), str(detail)))

        try:
            yield rec
        except BaseException as exc:
            if not recorded:
                _LINES.append((name, False,
                               f"aborted: {type(exc).__name__}: {exc}"))
            raise
        if not recorded:
            _LINES.append((name, False, "body finished without a verdict"))

    return open_criterion


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _LINES:
        word = "PASS" if passed else "FAIL"
        line = f"{word}  {name}"
        if detail:
            line += f": {detail}"
        terminalreporter.write_line(line)
