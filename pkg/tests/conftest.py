"""Shared test configuration and the acceptance summary.

Tests in test_acceptance.py are named test_NN_<criterion>; this hook
collects their outcomes and prints one PASS/FAIL line per criterion at
the end of the run.  A handful of sub-checks pin reference values the
implementation cannot hit at the stated tolerance; those are strict
xfails and surface here as "FAIL (expected)" with the analysis living
next to the tests.
"""

from __future__ import annotations

import re
from collections import defaultdict

ACCEPTANCE_FILE = "test_acceptance.py"

CRITERIA = {
    1: "worked-example",
    2: "analog-probability-one",
    3: "near-optimal-grover",
    4: "projector-identities",
    5: "trotter-error-scaling",
    6: "resonant-error-floor",
    7: "exact-digitization",
    8: "gap-law",
    9: "path-enumeration-oracle",
    10: "propagator-convergence",
    11: "semiclassical-sweep",
    12: "report-determinism",
}

XFAIL_NOTES = {
    1: "reference constants carry rounding artifacts",
    3: "quoted success form undershoots at N=2**10",
}

_NUM = re.compile(r"test_(\d{2})_")
_outcomes: dict[int, list[str]] = defaultdict(list)


def pytest_runtest_logreport(report):
    if ACCEPTANCE_FILE not in report.nodeid:
        return
    match = _NUM.search(report.nodeid)
    if match is None:
        return
    num = int(match.group(1))
    if report.when == "call" or (report.when == "setup" and not report.passed):
        if hasattr(report, "wasxfail"):
            outcome = "xfail" if report.skipped else "xpass"
        elif report.passed:
            outcome = "pass"
        elif report.failed:
            outcome = "fail"
        else:
            outcome = "skip"
        _outcomes[num].append(outcome)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(CRITERIA):
        outcomes = _outcomes.get(num)
        if not outcomes:
            continue
        if any(o in ("fail", "xpass") for o in outcomes):
            status = "FAIL"
        elif any(o == "xfail" for o in outcomes):
            note = XFAIL_NOTES.get(num, "known deviation, see test reasons")
            status = f"FAIL (expected: {note})"
        elif any(o == "skip" for o in outcomes):
            status = "SKIP"
        else:
            status = "PASS"
        terminalreporter.write_line(f"ACCEPTANCE {num:02d} {CRITERIA[num]}: {status}")
