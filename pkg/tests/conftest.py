import os
import random

import pytest


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow exhaustive scans")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow") or os.environ.get("MVD_RUNSLOW") == "1":
        return
    skip = pytest.mark.skip(reason="slow; pass --runslow or set MVD_RUNSLOW=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def rng():
    return random.Random(20261019)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = list(getattr(mod, "REPORT", []))
    for rep in terminalreporter.stats.get("skipped", []):
        if "test_acceptance" in rep.nodeid:
            lines.append(f"SKIP {rep.nodeid.split('::')[-1]} ({rep.longrepr[2]})")
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
