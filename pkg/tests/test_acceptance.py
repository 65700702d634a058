"""Acceptance criteria, one test each; the PASS/FAIL lines are repeated in the terminal summary."""

import pytest

from schubvan.acceptance import CRITERIA, run_criterion

LINES: list[str] = []


@pytest.mark.parametrize("number", sorted(CRITERIA), ids=lambda k: f"criterion_{k:02d}")
def test_criterion(number):
    result = run_criterion(number)
    print(result.line())
    LINES.append(result.line())
    assert result.ok, result.line()
