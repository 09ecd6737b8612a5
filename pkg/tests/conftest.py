import os

import pytest


def pytest_configure(config):
    config.addinivalue_line("markers", "long: slow checks, enabled with BASEQ_LONG=1")


def pytest_collection_modifyitems(config, items):
    if os.environ.get("BASEQ_LONG"):
        return
    skip = pytest.mark.skip(reason="set BASEQ_LONG=1 to run")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    from helpers import ACCEPTANCE
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
