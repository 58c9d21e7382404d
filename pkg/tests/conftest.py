"""Shared fixtures.

The reference JSON is generated offline by tests/data/make_reference_values.py
(mpmath, 60 digits) and committed; tests never regenerate it.  The oracle
suite is expensive, so it runs at most once per session and every module that
needs a report pulls from the same dict.
"""

import json
from pathlib import Path

import pytest

from conevac import run_oracle_suite

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def reference():
    with open(DATA_DIR / "reference_values.json") as fh:
        return json.load(fh)


@pytest.fixture(scope="session")
def oracle_reports():
    return {report.name: report for report in run_oracle_suite()}


def rel_err(got: float, want: float) -> float:
    if want == 0.0:
        return abs(got)
    return abs(got - want) / abs(want)
