"""Shared fixtures and the acceptance reporting hook.

Acceptance tests live in test_acceptance.py and are named
test_criterion_NN_*.  After the run a one-line PASS/FAIL verdict per
criterion is printed so the gate can be read off the terminal summary.
"""

import re

import pytest

from minkval import convex_hull, standard_simplex

_CRITERION = re.compile(r"test_criterion_(\d+)")
_results = {}


@pytest.fixture
def tri3():
    """Standard simplex conv{o, e1, e2, e3} in R^3."""
    return standard_simplex(3, 3)


@pytest.fixture
def tri2in3():
    """A 2-dimensional simplex embedded in R^3."""
    return standard_simplex(2, 3)


@pytest.fixture
def cube3():
    return convex_hull([(sx, sy, sz) for sx in (-1, 1) for sy in (-1, 1)
                        for sz in (-1, 1)])


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    num = int(m.group(1))
    if report.when == "call":
        _results[num] = report.outcome
    elif report.when == "setup" and report.outcome != "passed":
        _results[num] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _results:
        return
    tw = terminalreporter
    tw.section("acceptance criteria")
    for num in sorted(_results):
        outcome = _results[num]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        tw.write_line(f"ACCEPTANCE {num}: {verdict}")
