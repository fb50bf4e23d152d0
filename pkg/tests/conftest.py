import os
import sys

sys.path.insert(0, os.path.dirname(__file__))


def pytest_collection_modifyitems(config, items):
    import pytest

    if os.environ.get("RIGIDGEM_EXTENDED") == "1":
        return
    skip = pytest.mark.skip(reason="extended target; set RIGIDGEM_EXTENDED=1")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    lines = list(test_acceptance.RESULTS)
    if not lines:
        return
    if not any(line.startswith("criterion 9:") for line in lines):
        lines.append("criterion 9: SKIP  handle orders 14 and 20 are not reproducible at "
                     "desk scale; run with RIGIDGEM_EXTENDED=1 for the extended census")
    terminalreporter.section("acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)
