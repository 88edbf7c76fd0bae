import os
from collections import defaultdict

import pytest

ACCEPTANCE = defaultdict(list)  # criterion -> [(label, ok, detail)]


@pytest.fixture
def record():
    def _record(criterion, label, ok, detail=""):
        ACCEPTANCE[criterion].append((label, bool(ok), detail))
        return ok

    return _record


def pytest_collection_modifyitems(config, items):
    if os.environ.get("HOOKLAB_SLOW"):
        return
    skip = pytest.mark.skip(reason="extended run; set HOOKLAB_SLOW=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for criterion in sorted(ACCEPTANCE):
        checks = ACCEPTANCE[criterion]
        failed = [c for c in checks if not c[1]]
        status = "PASS" if not failed else "FAIL"
        tr.write_line(f"{status}  criterion {criterion}: {len(checks) - len(failed)}/{len(checks)} checks")
        for label, _, detail in failed:
            tr.write_line(f"        failed: {label} {detail}")
