import os
import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

SEED = int(os.environ.get("STANLEY_TEST_SEED", "20261016"))

ACCEPTANCE_LINES = []


def pytest_report_header(config):
    return f"stanleydepth test seed: {SEED} (override with STANLEY_TEST_SEED)"


@pytest.fixture
def rng():
    return random.Random(SEED)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    number, title = marker.args
    status = "PASS" if report.passed else "FAIL"
    detail = getattr(item, "criterion_detail", "")
    ACCEPTANCE_LINES.append((number, f"criterion {number:>2} {status}  {title}"
                                     + (f"  [{detail}]" if detail else "")))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section(f"acceptance criteria (seed {SEED})")
    for _, line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")
