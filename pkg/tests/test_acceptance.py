"""One test per acceptance criterion; each prints a PASS/FAIL line.

Run directly with ``python tests/test_acceptance.py`` for the bare report.
"""

import sys

import pytest

from declab.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion{c.number}" for c in CRITERIA])
def test_criterion(criterion, capsys):
    outcome = run_criterion(criterion)
    with capsys.disabled():
        print("\n" + outcome.line())
    assert outcome.ok, outcome.detail


if __name__ == "__main__":
    outcomes = [run_criterion(c) for c in CRITERIA]
    for o in outcomes:
        print(o.line())
    sys.exit(0 if all(o.ok for o in outcomes) else 1)
