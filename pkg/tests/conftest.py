import os
import time

import pytest

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", deadline=None, max_examples=500)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


class AcceptanceLog:
    """Collects one PASS/FAIL line per acceptance check."""

    def __init__(self):
        self.lines = []

    def run(self, label, check):
        start = time.perf_counter()
        try:
            detail = check()
        except BaseException as exc:
            self.lines.append(f"FAIL {label} ({time.perf_counter() - start:.1f}s): {type(exc).__name__}: {exc}"[:400])
            raise
        self.lines.append(f"PASS {label} ({time.perf_counter() - start:.1f}s){': ' + detail if detail else ''}")


_ACCEPTANCE = AcceptanceLog()


@pytest.fixture(scope="session")
def acceptance():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE.lines:
        terminalreporter.section("acceptance")
        for line in _ACCEPTANCE.lines:
            terminalreporter.write_line(line)
