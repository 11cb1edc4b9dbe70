"""Acceptance run: every criterion at full scale, one reported line each.

Run with -s to watch the lines as they complete; the same lines are
printed in the summary either way.  The whole suite is deterministic at
seed 7 and finishes in about a minute.
"""

import sys

import pytest

from meshpoly.suite import CRITERIA, run_suite

_RESULTS = None


def _results():
    global _RESULTS
    if _RESULTS is None:
        _RESULTS = run_suite(seed=7, scale=1.0,
                             emit=lambda line: print(line, file=sys.stderr))
    return _RESULTS


@pytest.mark.parametrize("number", range(1, len(CRITERIA) + 1))
def test_criterion(number):
    res = _results()[number - 1]
    print(res.line)
    assert res.passed, res.line


def test_every_criterion_reported():
    results = _results()
    assert [r.number for r in results] == list(range(1, 13))
    for r in results:
        assert r.line.startswith(f"criterion {r.number:2d}: ")
        assert ("PASS" in r.line) or ("FAIL" in r.line)
